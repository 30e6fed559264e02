// Parameter scans, the budgeted exhaustive family search, and the small-order
// design censuses used to confirm classification statements empirically.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedf/designs.hpp"

namespace sedf {

// Arithmetic conditions attached to the recipe preconditions.
enum class ScanKind {
  paley,            // q = 1 (mod 4)
  quadratic,        // q = 3 (mod 4)
  quartic_sedf,     // q = 1 + 16 t^2
  quartic_ds,       // q = 1 + 4 t^2, t odd
  quartic_ds_zero,  // q = 9 + 4 t^2, t odd
  sextic,           // q = 1 + 108 t^2
  octic1,           // q = 9 + 64 y^2 = 1 + 8 b^2, y odd
  octic2,           // q = 441 + 64 y^2 = 49 + 8 b^2
  semiprimitive,    // q = p^(2l): even-degree prime powers
};

std::optional<ScanKind> scan_kind_from_name(const std::string& name);
const char* scan_kind_name(ScanKind k);
std::vector<std::string> scan_kind_names();

struct ScanHit {
  uint64_t q = 0;
  uint32_t p = 0, m = 0;
  std::map<std::string, uint64_t> witness;  // e.g. {"t":3} or {"y":1,"b":3}
};

// All prime powers q <= q_max meeting the condition, ascending.
std::vector<ScanHit> scan_diophantine(ScanKind kind, uint64_t q_max);

enum class CanonMode { translation };

struct SearchConfig {
  GroupPtr group;
  uint32_t m = 2;
  uint32_t k = 1;
  CanonMode canon = CanonMode::translation;
  uint64_t node_budget = UINT64_MAX;
  uint32_t workers = 1;
};

struct SearchOutcome {
  std::vector<Family> families;  // canonical: 0 in A1, sets ordered by minimum
  bool exhaustive = true;        // false when some branch hit its budget slice
  uint64_t nodes = 0;
  std::optional<uint64_t> lambda;  // forced level; nullopt when infeasible
};

// Enumerates every family with the exact per-index property at (m, k) in
// canonical position: the set containing 0 comes first and sets are ordered
// by their minimum element. Infeasible (n, m, k) return an empty exhaustive
// result. Determinism: the result list is identical for any worker count;
// the budget is divided into equal per-branch slices.
SearchOutcome exhaustive_sedf(const SearchConfig& cfg);

// Translate so the smallest covered encoding becomes 0, then order sets by
// minimum. Maps any translate of a search result back into the result list.
Family canonicalize_family(const Family& f);

enum class CensusMode { exhaustive, classes };

struct PdsCensusEntry {
  std::string label;
  std::vector<elem_t> elements;
  PdsParams params;
  PdsType type = PdsType::other;
};

struct PdsCensusResult {
  std::vector<PdsCensusEntry> entries;
  bool found_other = false;  // a constrained PDS outside the known types
};

// Every symmetric partial difference set with 0 excluded, lambda = mu - 1 and
// k < n/2: exhaustive orbit search (n <= 64), or cyclotomic classes only
// (fields, any cap-sized order). Each hit is classified; anything falling
// outside the two known parameter types is flagged.
PdsCensusResult pds_census(GroupPtr group, CensusMode mode);

struct DsCensusEntry {
  std::vector<elem_t> elements;
  DsParams params;
};

// Difference sets containing 0 with k <= n/2 and lambda <= lambda_cap.
// The cap keeps the enumeration desk-scale; higher-lambda sets exist.
std::vector<DsCensusEntry> ds_census(GroupPtr group, uint64_t lambda_cap = 3);

}  // namespace sedf
