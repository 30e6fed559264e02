// Difference multisets and verifiers for the design predicates built on them:
// difference sets, partial difference sets, and the strong external
// difference family hierarchy (exact, per-set, and bounded variants).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedf/group.hpp"

namespace sedf {

// Multiset over the group, stored as a dense count vector indexed by encoding.
struct DiffMultiset {
  const GroupTable* group = nullptr;
  std::vector<uint64_t> counts;

  explicit DiffMultiset(const GroupTable& g) : group(&g), counts(g.n, 0) {}

  uint64_t total() const;
  uint64_t at(elem_t x) const { return counts[x]; }
  bool operator==(const DiffMultiset& o) const {
    return group->n == o.group->n && counts == o.counts;
  }
};

// Delta(A, B) = multiset { a - b : a in A, b in B }.
DiffMultiset delta(const ElementSet& a, const ElementSet& b);
void accumulate_delta(DiffMultiset& acc, const ElementSet& a, const ElementSet& b);

struct DsParams {
  uint64_t n = 0, k = 0, lambda = 0;
};
struct PdsParams {
  uint64_t n = 0, k = 0, lambda = 0, mu = 0;
};
struct SedfParams {
  uint64_t n = 0, m = 0, k = 0, lambda = 0;
};
struct GsedfParams {
  uint64_t n = 0, m = 0;
  std::vector<uint64_t> k, lambda;
};

// (n,k,lambda): Delta(D,D) is k at 0 and constant lambda elsewhere.
std::optional<DsParams> verify_ds(const ElementSet& d);

// (n,k,lambda,mu): 0 not in D (throws ZeroInSet otherwise); Delta(D,D) is k at
// 0, lambda on D, mu on G - D - {0}. mu reported as 0 when that region is empty.
std::optional<PdsParams> verify_pds(const ElementSet& d);

struct LabeledSet {
  std::string label;
  ElementSet set;
};

// Disjoint nonempty subsets of one group; sets[i].set.group() must all be *group.
struct Family {
  GroupPtr group;
  std::vector<LabeledSet> sets;
};

// First place a verifier saw the expected count violated.
struct Counterexample {
  uint32_t set_index = 0;
  elem_t element = 0;
  uint64_t got = 0;
  uint64_t want = 0;
};

struct SedfCheck {
  std::optional<SedfParams> params;  // present iff the family verifies
  std::string reason;                // human-readable failure cause
  std::optional<Counterexample> cex;
};
// Exact variant: sum over j != i of Delta(A_i, A_j) equals lambda * (G - {0})
// for every i, with one k and one lambda for the whole family.
SedfCheck verify_sedf(const Family& f);

struct GsedfCheck {
  std::optional<GsedfParams> params;
  std::string reason;
  std::optional<Counterexample> cex;
};
// Per-set variant: set sizes k_i and levels lambda_i may differ across i.
GsedfCheck verify_gsedf(const Family& f);

struct BgsedfCheck {
  bool pass = false;
  bool zero_ok = true;                 // no external difference hits 0
  std::vector<uint64_t> achieved;      // per-index max count over G - {0}
  std::string reason;
  std::optional<Counterexample> cex;   // first bound violation
};
// Bounded variant: per-index counts must stay <= bounds[i] everywhere off 0.
BgsedfCheck verify_bgsedf(const Family& f, const std::vector<uint64_t>& bounds);

// G - D of an (n,k,lambda) difference set is an (n, n-k, n-2k+lambda)
// difference set; computed and re-verified.
std::pair<ElementSet, DsParams> complement_ds(const ElementSet& d);

// For a symmetric (n,k,lambda,mu) partial difference set D (0 not in D),
// D' = G - D - {0} is an (n, n-k-1, n-2k+mu-2, n-2k+lambda) one.
std::pair<ElementSet, PdsParams> complement_pds(const ElementSet& d);

enum class PartitionBranch { full_group, punctured };

struct PartitionTheoremReport {
  PartitionBranch branch = PartitionBranch::full_group;
  bool family_side = false;       // the partition is a per-set-level family
  bool per_set_side = false;      // every part is a DS / qualifying PDS
  bool agree = false;             // the two sides match, as they must
  bool translation_ok = false;    // parameter identities when both sides hold
  std::string detail;
};
// Partition equivalences: a partition of G is a per-set-level family iff every
// part is a difference set; a partition of G - {0} is one iff every part is a
// partial difference set with lambda' = mu' - 1. Checks both sides and the
// parameter translation, and reports whether they agree.
PartitionTheoremReport check_partition_theorems(const Family& f);

// Counting conditions: the lambda forced by (n, m, k) (resp. the lambda_i
// forced by (n, k_1..k_m)) when integral; nullopt when no family can exist.
std::optional<uint64_t> feasible_sedf_lambda(uint64_t n, uint64_t m, uint64_t k);
std::optional<std::vector<uint64_t>> feasible_gsedf_lambda(uint64_t n,
                                                           const std::vector<uint64_t>& ks);

enum class PdsType {
  paley_type,    // (n, (n-1)/2, (n-5)/4, (n-1)/4)
  order11_type,  // (243, 22, 1, 2)
  other,
};
PdsType classify_pds_type(const PdsParams& p);
const char* pds_type_name(PdsType t);

}  // namespace sedf
