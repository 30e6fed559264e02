// Exact arithmetic for Z_n and for F_{p^m} in a deterministic canonical
// representation (monic irreducible modulus, log/antilog tables), plus a flat
// bitset container for subsets of group elements.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sedf {

using elem_t = uint32_t;

// Table-based fields above this order are rejected rather than silently slow.
constexpr uint64_t kDefaultOrderCap = 1ull << 20;

enum class Errc {
  NotPrime,
  ReducibleModulus,
  NotPrimitive,
  OrderTooLarge,
  ZeroInverse,
  NotAField,
  OrderDoesNotDivide,
  NotSemiprimitive,
  OddDegree,
  GroupMismatch,
  ZeroInSet,
  NotADs,
  NotAPds,
  NotSymmetric,
  NotAPartition,
  ConditionNotMet,
  NotSubsetOfClass,
  NotDisjoint,
  BudgetExhausted,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

enum class GroupKind { cyclic, prime_power_field };

// Construction request. For fields an empty modulus means "pick the canonical
// one" (first monic irreducible in coefficient-encoding order).
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  uint64_t n = 0;                 // cyclic order
  uint32_t p = 0;                 // field characteristic
  uint32_t m = 0;                 // extension degree
  std::vector<uint32_t> modulus;  // m+1 coefficients, low degree first, monic

  static GroupSpec cyclic_group(uint64_t n) {
    GroupSpec s;
    s.kind = GroupKind::cyclic;
    s.n = n;
    return s;
  }
  static GroupSpec field(uint32_t p, uint32_t m) {
    GroupSpec s;
    s.kind = GroupKind::prime_power_field;
    s.p = p;
    s.m = m;
    return s;
  }
};

// Immutable after construction; all operations pure and safe for concurrent use.
// Field elements sum(a_i x^i) are encoded as sum(a_i p^i); cyclic elements as
// their residue. The identity always encodes as 0.
struct GroupTable {
  GroupSpec spec;  // modulus resolved
  GroupKind kind = GroupKind::cyclic;
  uint64_t n = 0;
  uint32_t p = 0, m = 0;
  elem_t theta = 0;             // primitive element (fields)
  std::vector<elem_t> antilog;  // antilog[i] = theta^i, 0 <= i < q-1 (fields)
  std::vector<elem_t> logtab;   // inverse map; logtab[0] unused (fields)
  std::vector<elem_t> neg_tab;  // negation table (all kinds)

  bool is_field() const { return kind == GroupKind::prime_power_field; }

  elem_t add(elem_t a, elem_t b) const {
    if (kind == GroupKind::cyclic || m == 1) {
      uint64_t s = uint64_t(a) + b;
      return elem_t(s >= n ? s - n : s);
    }
    if (p == 2) return a ^ b;
    return add_digits(a, b);
  }
  elem_t neg(elem_t a) const { return neg_tab[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg_tab[b]); }

  // Multiplicative structure, fields only.
  elem_t mul(elem_t a, elem_t b) const {
    require_field();
    if (a == 0 || b == 0) return 0;
    uint64_t s = uint64_t(logtab[a]) + logtab[b];
    uint64_t qm1 = n - 1;
    return antilog[s >= qm1 ? s - qm1 : s];
  }
  elem_t inv(elem_t a) const {
    require_field();
    if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
    uint64_t qm1 = n - 1;
    elem_t l = logtab[a];
    return antilog[l == 0 ? 0 : qm1 - l];
  }
  elem_t pow(elem_t a, uint64_t exp) const;
  uint64_t elem_order(elem_t a) const;  // multiplicative order, a != 0

 private:
  elem_t add_digits(elem_t a, elem_t b) const;
  void require_field() const {
    if (!is_field()) throw Error(Errc::NotAField, "operation requires a field");
  }
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Deterministic: the same spec (and overrides) always yields bit-identical
// tables. Overrides are validated (irreducibility / primitivity).
GroupPtr build_group(const GroupSpec& spec,
                     const std::vector<uint32_t>* modulus_override = nullptr,
                     std::optional<elem_t> theta_override = std::nullopt,
                     uint64_t order_cap = kDefaultOrderCap);

bool is_prime(uint64_t v);
// Returns (p, m) when q = p^m with p prime and m >= 1.
std::optional<std::pair<uint32_t, uint32_t>> as_prime_power(uint64_t q);
std::vector<uint64_t> prime_factors(uint64_t v);  // distinct primes, ascending
std::optional<uint64_t> exact_sqrt(uint64_t v);
// t >= 0 with q = base + mult * t^2, when one exists.
std::optional<uint64_t> quadratic_witness(uint64_t q, uint64_t base, uint64_t mult);

// Subset of group elements as an n-bit set with cached cardinality.
class ElementSet {
 public:
  explicit ElementSet(const GroupTable& g) : g_(&g), bits_((g.n + 63) / 64, 0) {}

  const GroupTable& group() const { return *g_; }
  uint64_t size() const { return k_; }
  bool empty() const { return k_ == 0; }

  bool contains(elem_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1u; }
  void insert(elem_t x) {
    check(x);
    uint64_t& w = bits_[x >> 6];
    uint64_t bit = 1ull << (x & 63);
    if (!(w & bit)) {
      w |= bit;
      ++k_;
    }
  }
  void erase(elem_t x) {
    check(x);
    uint64_t& w = bits_[x >> 6];
    uint64_t bit = 1ull << (x & 63);
    if (w & bit) {
      w &= ~bit;
      --k_;
    }
  }

  std::vector<elem_t> elements() const;  // ascending encodings

  ElementSet complement() const;  // G - this
  bool intersects(const ElementSet& o) const;
  bool is_symmetric() const;  // -S == S

  bool operator==(const ElementSet& o) const {
    return g_->n == o.g_->n && bits_ == o.bits_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }
  bool operator<(const ElementSet& o) const { return bits_ < o.bits_; }

  static ElementSet of(const GroupTable& g, const std::vector<elem_t>& xs) {
    ElementSet s(g);
    for (elem_t x : xs) s.insert(x);
    return s;
  }

 private:
  void check(elem_t x) const {
    if (x >= g_->n) throw Error(Errc::BadInput, "element encoding out of range");
  }
  const GroupTable* g_;
  std::vector<uint64_t> bits_;
  uint64_t k_ = 0;
};

}  // namespace sedf
