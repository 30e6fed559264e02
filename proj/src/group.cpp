// Group construction: canonical modulus / primitive element selection and the
// log-table build. Everything here is deterministic for a given spec.
#include "sedf/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sedf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NotAField: return "NotAField";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::NotSemiprimitive: return "NotSemiprimitive";
    case Errc::OddDegree: return "OddDegree";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ZeroInSet: return "ZeroInSet";
    case Errc::NotADs: return "NotADs";
    case Errc::NotAPds: return "NotAPds";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::ConditionNotMet: return "ConditionNotMet";
    case Errc::NotSubsetOfClass: return "NotSubsetOfClass";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod) {
  return (uint64_t)((__uint128_t)a * b % mod);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t mod) {
  uint64_t r = 1 % mod;
  a %= mod;
  while (e) {
    if (e & 1) r = mulmod(r, a, mod);
    a = mulmod(a, a, mod);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (v % sp == 0) return v == sp;
  }
  uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::optional<std::pair<uint32_t, uint32_t>> as_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  for (uint32_t m = 1; m <= 63; ++m) {
    if ((__uint128_t(1) << m) > q) break;  // even 2^m exceeds q
    uint64_t r = uint64_t(std::llround(std::pow(double(q), 1.0 / m)));
    uint64_t lo = r > 2 ? r - 2 : 2, hi = r + 2;
    for (uint64_t cand = lo; cand <= hi; ++cand) {
      __uint128_t pw = 1;
      bool over = false;
      for (uint32_t i = 0; i < m; ++i) {
        pw *= cand;
        if (pw > q) {
          over = true;
          break;
        }
      }
      if (!over && pw == q && cand <= 0xffffffffull && is_prime(cand))
        return std::make_pair(uint32_t(cand), m);
    }
  }
  return std::nullopt;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::optional<uint64_t> exact_sqrt(uint64_t v) {
  uint64_t r = uint64_t(std::llround(std::sqrt(double(v))));
  for (uint64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

std::optional<uint64_t> quadratic_witness(uint64_t q, uint64_t base, uint64_t mult) {
  if (q < base || (q - base) % mult) return std::nullopt;
  return exact_sqrt((q - base) / mult);
}

namespace {

// Dense polynomial over F_p, low degree first, no trailing-zero guarantee.
using Poly = std::vector<uint32_t>;

int deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) { return uint32_t(powmod(a, p - 2, p)); }

// a mod f (f nonconstant), in place.
void poly_mod(Poly& a, const Poly& f, uint32_t p) {
  int df = deg(f);
  uint32_t lead_inv = inv_mod_p(f[df], p);
  for (int i = deg(a); i >= df; --i) {
    if (a[i] == 0) continue;
    uint32_t c = uint32_t(uint64_t(a[i]) * lead_inv % p);
    for (int j = 0; j <= df; ++j) {
      uint64_t t = uint64_t(c) * f[j] % p;
      uint32_t& ai = a[i - df + j];
      ai = uint32_t((ai + p - t) % p);
    }
  }
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  Poly c(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
  }
  poly_mod(c, f, p);
  c.resize(std::max<size_t>(1, f.size() - 1), 0);
  return c;
}

bool poly_divides(const Poly& d, Poly a, uint32_t p) {
  poly_mod(a, d, p);
  return deg(a) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, uint32_t p) {
  int df = deg(f);
  if (df <= 0) return false;
  if (df == 1) return true;
  for (int dd = 1; dd <= df / 2; ++dd) {
    uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
      Poly d(dd + 1, 0);
      uint64_t t = enc;
      for (int i = 0; i < dd; ++i) {
        d[i] = uint32_t(t % p);
        t /= p;
      }
      d[dd] = 1;
      if (poly_divides(d, f, p)) return false;
    }
  }
  return true;
}

Poly decode(elem_t x, uint32_t p, uint32_t m) {
  Poly out(m, 0);
  for (uint32_t i = 0; i < m; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

elem_t encode(const Poly& a, uint32_t p) {
  elem_t x = 0;
  for (size_t i = a.size(); i-- > 0;) x = elem_t(uint64_t(x) * p + a[i]);
  return x;
}

elem_t raw_mul(elem_t a, elem_t b, const Poly& f, uint32_t p, uint32_t m) {
  return encode(poly_mul_mod(decode(a, p, m), decode(b, p, m), f, p), p);
}

elem_t raw_pow(elem_t a, uint64_t e, const Poly& f, uint32_t p, uint32_t m) {
  elem_t r = 1, base = a;
  while (e) {
    if (e & 1) r = raw_mul(r, base, f, p, m);
    base = raw_mul(base, base, f, p, m);
    e >>= 1;
  }
  return r;
}

Poly canonical_modulus(uint32_t p, uint32_t m) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < m; ++i) count *= p;
  for (uint64_t enc = 0; enc < count; ++enc) {
    Poly f(m + 1, 0);
    uint64_t t = enc;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = uint32_t(t % p);
      t /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::BadInput, "no irreducible modulus found");  // unreachable
}

bool has_full_order(elem_t a, uint64_t qm1, const std::vector<uint64_t>& fac, const Poly& f,
                    uint32_t p, uint32_t m) {
  if (raw_pow(a, qm1, f, p, m) != 1) return false;
  for (uint64_t ell : fac)
    if (raw_pow(a, qm1 / ell, f, p, m) == 1) return false;
  return true;
}

}  // namespace

elem_t GroupTable::add_digits(elem_t a, elem_t b) const {
  elem_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t da = a % p, db = b % p;
    a /= p;
    b /= p;
    uint32_t s = da + db;
    if (s >= p) s -= p;
    out += s * mult;
    mult *= p;
  }
  return out;
}

elem_t GroupTable::pow(elem_t a, uint64_t exp) const {
  require_field();
  if (a == 0) return exp == 0 ? 1 : 0;
  uint64_t qm1 = n - 1;
  uint64_t l = mulmod(logtab[a], exp % qm1, qm1);
  return antilog[l];
}

uint64_t GroupTable::elem_order(elem_t a) const {
  require_field();
  if (a == 0) throw Error(Errc::ZeroInverse, "order of zero undefined");
  uint64_t qm1 = n - 1;
  return qm1 / std::gcd(qm1, uint64_t(logtab[a]));
}

GroupPtr build_group(const GroupSpec& spec, const std::vector<uint32_t>* modulus_override,
                     std::optional<elem_t> theta_override, uint64_t order_cap) {
  auto g = std::make_shared<GroupTable>();
  g->kind = spec.kind;

  if (spec.kind == GroupKind::cyclic) {
    if (spec.n < 2) throw Error(Errc::BadInput, "cyclic order must be >= 2");
    if (spec.n > order_cap) throw Error(Errc::OrderTooLarge, "group order exceeds cap");
    g->n = spec.n;
    g->spec = spec;
    g->neg_tab.resize(g->n);
    for (uint64_t a = 0; a < g->n; ++a) g->neg_tab[a] = elem_t(a ? g->n - a : 0);
    return g;
  }

  uint32_t p = spec.p, m = spec.m;
  if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::BadInput, "extension degree must be >= 1");
  __uint128_t q128 = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q128 *= p;
    if (q128 > order_cap) throw Error(Errc::OrderTooLarge, "field order exceeds cap");
  }
  uint64_t q = uint64_t(q128);

  Poly f;
  if (modulus_override) {
    const auto& mo = *modulus_override;
    if (mo.size() != size_t(m) + 1) throw Error(Errc::BadInput, "modulus must have m+1 coefficients");
    if (mo[m] != 1) throw Error(Errc::BadInput, "modulus must be monic");
    for (uint32_t c : mo)
      if (c >= p) throw Error(Errc::BadInput, "modulus coefficient out of range");
    f = Poly(mo.begin(), mo.end());
    if (!is_irreducible(f, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
  } else if (!spec.modulus.empty()) {
    return build_group(GroupSpec{spec.kind, spec.n, spec.p, spec.m, {}}, &spec.modulus,
                       theta_override, order_cap);
  } else {
    f = canonical_modulus(p, m);
  }

  g->n = q;
  g->p = p;
  g->m = m;
  g->spec = spec;
  g->spec.n = q;
  g->spec.modulus.assign(f.begin(), f.end());

  uint64_t qm1 = q - 1;
  auto fac = prime_factors(qm1);

  // Prime fields skip the polynomial arithmetic entirely.
  auto order_ok = [&](elem_t a) {
    if (a == 0 || a >= q) return false;
    if (m == 1) {
      if (powmod(a, qm1, q) != 1) return false;
      for (uint64_t ell : fac)
        if (powmod(a, qm1 / ell, q) == 1) return false;
      return true;
    }
    return has_full_order(a, qm1, fac, f, p, m);
  };

  elem_t theta = 0;
  if (theta_override) {
    theta = *theta_override;
    if (!order_ok(theta)) throw Error(Errc::NotPrimitive, "element is not primitive");
  } else {
    for (elem_t cand = 1; cand < q; ++cand) {
      if (order_ok(cand)) {
        theta = cand;
        break;
      }
    }
    if (theta == 0) throw Error(Errc::NotPrimitive, "no primitive element found");
  }
  g->theta = theta;

  g->antilog.assign(qm1, 0);
  g->logtab.assign(q, 0);
  std::vector<char> seen(q, 0);
  elem_t cur = 1;
  for (uint64_t i = 0; i < qm1; ++i) {
    if (seen[cur]) throw Error(Errc::NotPrimitive, "powers repeat before covering the group");
    seen[cur] = 1;
    g->antilog[i] = cur;
    g->logtab[cur] = elem_t(i);
    cur = m == 1 ? elem_t(uint64_t(cur) * theta % q) : raw_mul(cur, theta, f, p, m);
  }
  if (cur != 1) throw Error(Errc::NotPrimitive, "powers do not close a cycle");

  g->neg_tab.resize(q);
  if (p == 2) {
    for (uint64_t a = 0; a < q; ++a) g->neg_tab[a] = elem_t(a);
  } else {
    for (uint64_t a = 0; a < q; ++a) {
      Poly d = decode(elem_t(a), p, m);
      for (auto& c : d) c = c ? p - c : 0;
      g->neg_tab[a] = encode(d, p);
    }
  }
  return g;
}

std::vector<elem_t> ElementSet::elements() const {
  std::vector<elem_t> out;
  out.reserve(k_);
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      unsigned bit = unsigned(__builtin_ctzll(word));
      out.push_back(elem_t(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet out(*g_);
  for (size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = ~bits_[w];
  // Clear bits past n-1.
  uint64_t tail = g_->n % 64;
  if (tail) out.bits_.back() &= (1ull << tail) - 1;
  out.k_ = g_->n - k_;
  return out;
}

bool ElementSet::intersects(const ElementSet& o) const {
  if (g_->n != o.g_->n) throw Error(Errc::GroupMismatch, "sets live in different groups");
  for (size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & o.bits_[w]) return true;
  return false;
}

bool ElementSet::is_symmetric() const {
  for (elem_t x : elements())
    if (!contains(g_->neg(x))) return false;
  return true;
}

}  // namespace sedf
