// Recipe builders: each produces explicit families in a concrete group
// together with the parameter claims they are supposed to satisfy, so a
// verifier can re-check every artifact from scratch. Claimed values are kept
// as exact rationals; `printed` values record published figures that are
// cross-checked and flagged (not trusted) when they disagree.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sedf/cyclotomy.hpp"
#include "sedf/designs.hpp"

namespace sedf {

enum class DesignKind { ds, pds, sedf, gsedf, bgsedf };
const char* design_kind_name(DesignKind k);

struct Rat {
  int64_t num = 0;
  int64_t den = 1;  // > 0

  static Rat whole(int64_t v) { return Rat{v, 1}; }
  bool is_integer() const { return num % den == 0; }
  int64_t value() const { return num / den; }
  bool matches(uint64_t v) const { return __int128(v) * den == __int128(num); }
  std::string str() const {
    int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    int64_t nn = num / g, dd = den / g;
    return dd == 1 ? std::to_string(nn) : std::to_string(nn) + "/" + std::to_string(dd);
  }
};

// One parameter claim about the family as a whole (target == "") or a single
// labeled set. Keys follow the verifier outputs: "n", "m", "k", "lambda",
// "mu", and indexed forms "k[0]", "lambda[1]", ...
struct Claim {
  std::string target;
  DesignKind kind = DesignKind::ds;
  std::map<std::string, Rat> values;   // derived here; disagreement is an error
  std::map<std::string, Rat> printed;  // published figures; disagreement is a warning
};

struct Construction {
  std::string name;
  GroupPtr group;
  Family family;
  std::vector<Claim> claims;
};

// --- recipe builders -------------------------------------------------------
// All builders validate their arithmetic preconditions (ConditionNotMet on
// failure) and build the canonical field for q.

// Halved multiplicative group: {C0, C1} for q = 1 (mod 4); the classic
// two-set family with k = (q-1)/2, lambda = (q-1)/4. Each class is also
// claimed as a (q, (q-1)/2, (q-5)/4, (q-1)/4) partial difference set. A
// published lambda of (q+3)/4 is carried as a printed cross-check.
std::vector<Construction> paley_sedf(uint64_t q, uint64_t order_cap = kDefaultOrderCap);

// q = 3 (mod 4): {C0, C1+{0}} (which = 0) or {C1, C0+{0}} (which = 1), a
// (q,2; (q-1)/2, (q+1)/2; (q+1)/4, (q+1)/4) per-set-level family; both parts
// are difference sets.
std::vector<Construction> quadratic_gsedf(uint64_t q, int which = 0,
                                          uint64_t order_cap = kDefaultOrderCap);

// q = 1 + 16t^2: {C0, C2} (which = 0) or {C1, C3} (which = 1), a
// (q, 2; (q-1)/4, (q-1)/16) two-set family on quartic classes.
std::vector<Construction> quartic_sedf(uint64_t q, int which = 0,
                                       uint64_t order_cap = kDefaultOrderCap);

enum class ResidueVariant { residue, residue_plus_zero };

// Quartic classes as difference sets.
//  - residue (q = 1 + 4t^2, t odd): C_i is a (q, (q-1)/4, (q-5)/16)-DS;
//    returns the pair {C_i, complement} and the five-part partition
//    {C0..C3, {0}}. The five-part lambda has a published figure (3q-3)/16
//    carried as a printed cross-check of the derived (3q+1)/16.
//  - residue_plus_zero (q = 9 + 4t^2, t odd): C_i + {0} is a
//    (q, (q+3)/4, (q+3)/16)-DS; returns the pair {C_i+{0}, complement}.
std::vector<Construction> quartic_ds_gsedf(uint64_t q, ResidueVariant variant,
                                           uint32_t class_index = 0,
                                           uint64_t order_cap = kDefaultOrderCap);

// q = 1 + 108t^2: {C_w, C_{w+3}} on sextic classes (which = w in 0..2), a
// (q, 2; (q-1)/6, (q-1)/36) two-set family.
std::vector<Construction> sextic_sedf(uint64_t q, int which = 0,
                                      uint64_t order_cap = kDefaultOrderCap);

// Octic classes as difference sets.
//  - residue (q = 9 + 64y^2 = 1 + 8b^2, y odd): C_i is a
//    (q, (q-1)/8, (q-9)/64)-DS; returns the pair {C_i, complement} and the
//    nine-part partition {C0..C7, {0}}.
//  - residue_plus_zero (q = 441 + 64y^2 = 49 + 8b^2): C_i + {0} is a
//    (q, (q+7)/8, (q+7)/64)-DS; returns the pair {C_i+{0}, complement}.
std::vector<Construction> octic_constructions(uint64_t q, ResidueVariant variant,
                                              uint32_t class_index = 0,
                                              uint64_t order_cap = kDefaultOrderCap);

// The eleven order-11 classes of the 243-element field: a (243, 11; 22; 20)
// family whose parts are each (243, 22, 1, 2) partial difference sets.
std::vector<Construction> order11_sedf_243();

// Bounded family from subsets of two distinct classes when e = sqrt(q) + 1:
// {S_i, S_j} (or {S_i + {0}, S_j}) meets per-set bound 1. Empty subset specs
// mean the whole class. Errors: OddDegree, ConditionNotMet (i == j),
// NotSubsetOfClass.
Construction semiprimitive_bgsedf(uint64_t q, uint32_t i, uint32_t j,
                                  const std::vector<elem_t>& si_spec = {},
                                  const std::vector<elem_t>& sj_spec = {}, bool with_zero = false,
                                  uint64_t order_cap = kDefaultOrderCap);

// Pads pairwise-disjoint difference sets with every leftover group element as
// a singleton, giving a per-set-level family on all of G. Errors:
// NotDisjoint, NotADs, ConditionNotMet (fewer than two resulting sets).
Construction singleton_gsedf_extension(const Family& ds_sets);

// {D, G - D - {0}} for a symmetric partial difference set D with
// lambda = mu - 1: a (n, 2; k, n-k-1; k-lambda-1, k-lambda-1) family.
// Errors: ZeroInSet, NotAPds, NotSymmetric, ConditionNotMet.
Construction pds_pair_gsedf(GroupPtr group, const ElementSet& d);

// --- re-verification -------------------------------------------------------

struct ValueMismatch {
  std::string target, key;
  Rat claimed;
  uint64_t computed = 0;
  bool printed_source = false;  // true: published figure (warning only)
};

struct ClaimOutcome {
  std::string target;
  DesignKind kind = DesignKind::ds;
  bool verified = false;  // the design property itself holds
  std::string reason;
  std::vector<std::pair<std::string, uint64_t>> computed;
  std::vector<ValueMismatch> mismatches;
};

struct ConstructionReport {
  std::string name;
  std::vector<ClaimOutcome> outcomes;
  bool designs_ok = true;             // every claimed property verified
  bool derived_ok = true;             // no derived-value disagreements
  uint32_t printed_mismatches = 0;    // published figures that failed cross-check
  bool ok() const { return designs_ok && derived_ok; }
};

// Re-checks every claim of `c` from scratch with the generic verifiers.
ConstructionReport verify_construction(const Construction& c);

struct RecipeInfo {
  std::string name;
  std::string summary;
};
std::vector<RecipeInfo> construction_catalog();

}  // namespace sedf
