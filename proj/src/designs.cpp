// Difference-multiset accumulation and the design verifiers. The accumulation
// inner loop is the hot path for large verification sweeps, so the group
// operation is specialized per representation instead of dispatched per pair.
#include "sedf/designs.hpp"

#include <algorithm>
#include <numeric>

namespace sedf {

uint64_t DiffMultiset::total() const {
  return std::accumulate(counts.begin(), counts.end(), uint64_t(0));
}

void accumulate_delta(DiffMultiset& acc, const ElementSet& a, const ElementSet& b) {
  const GroupTable& g = a.group();
  if (&b.group() != &g || acc.group != &g)
    throw Error(Errc::GroupMismatch, "difference across distinct groups");
  const std::vector<elem_t> as = a.elements();
  const std::vector<elem_t> bs = b.elements();
  uint64_t* cnt = acc.counts.data();

  if (g.kind == GroupKind::cyclic || g.m == 1) {
    const elem_t n = elem_t(g.n);
    for (elem_t bv : bs) {
      const elem_t nb = bv ? n - bv : 0;
      for (elem_t av : as) {
        elem_t s = av + nb;
        cnt[s >= n ? s - n : s]++;
      }
    }
  } else if (g.p == 2) {
    for (elem_t bv : bs)
      for (elem_t av : as) cnt[av ^ bv]++;
  } else {
    for (elem_t bv : bs) {
      const elem_t nb = g.neg(bv);
      for (elem_t av : as) cnt[g.add(av, nb)]++;
    }
  }
}

DiffMultiset delta(const ElementSet& a, const ElementSet& b) {
  DiffMultiset acc(a.group());
  accumulate_delta(acc, a, b);
  return acc;
}

std::optional<DsParams> verify_ds(const ElementSet& d) {
  const GroupTable& g = d.group();
  DiffMultiset dd = delta(d, d);
  uint64_t k = d.size();
  uint64_t lam = g.n > 1 ? dd.counts[1] : 0;
  for (uint64_t x = 1; x < g.n; ++x)
    if (dd.counts[x] != lam) return std::nullopt;
  return DsParams{g.n, k, lam};
}

std::optional<PdsParams> verify_pds(const ElementSet& d) {
  const GroupTable& g = d.group();
  if (d.contains(0)) throw Error(Errc::ZeroInSet, "partial difference set must avoid 0");
  DiffMultiset dd = delta(d, d);
  uint64_t k = d.size();
  bool have_lam = false, have_mu = false;
  uint64_t lam = 0, mu = 0;
  for (uint64_t x = 1; x < g.n; ++x) {
    if (d.contains(elem_t(x))) {
      if (!have_lam) {
        lam = dd.counts[x];
        have_lam = true;
      } else if (dd.counts[x] != lam) {
        return std::nullopt;
      }
    } else {
      if (!have_mu) {
        mu = dd.counts[x];
        have_mu = true;
      } else if (dd.counts[x] != mu) {
        return std::nullopt;
      }
    }
  }
  return PdsParams{g.n, k, lam, mu};
}

namespace {

// Structural validation shared by the family verifiers. Math verdicts are
// reported through `reason`; only cross-group wiring throws.
bool family_shape_ok(const Family& f, std::string& reason) {
  if (!f.group) throw Error(Errc::BadInput, "family has no group");
  if (f.sets.size() < 2) {
    reason = "family must contain at least two sets";
    return false;
  }
  for (const auto& ls : f.sets) {
    if (&ls.set.group() != f.group.get())
      throw Error(Errc::GroupMismatch, "family set bound to a different group");
    if (ls.set.empty()) {
      reason = "set '" + ls.label + "' is empty";
      return false;
    }
  }
  for (size_t i = 0; i < f.sets.size(); ++i)
    for (size_t j = i + 1; j < f.sets.size(); ++j)
      if (f.sets[i].set.intersects(f.sets[j].set)) {
        reason = "sets '" + f.sets[i].label + "' and '" + f.sets[j].label + "' overlap";
        return false;
      }
  return true;
}

// Per-index external sum: sum over j != i of Delta(A_i, A_j).
DiffMultiset external_sum(const Family& f, size_t i) {
  DiffMultiset acc(*f.group);
  for (size_t j = 0; j < f.sets.size(); ++j)
    if (j != i) accumulate_delta(acc, f.sets[i].set, f.sets[j].set);
  return acc;
}

}  // namespace

SedfCheck verify_sedf(const Family& f) {
  SedfCheck out;
  if (!family_shape_ok(f, out.reason)) return out;
  const uint64_t n = f.group->n;
  const size_t m = f.sets.size();

  uint64_t k = f.sets[0].set.size();
  for (const auto& ls : f.sets)
    if (ls.set.size() != k) {
      out.reason = "set sizes differ ('" + ls.label + "' has " + std::to_string(ls.set.size()) +
                   ", expected " + std::to_string(k) + ")";
      return out;
    }

  uint64_t lambda = 0;
  bool have_lambda = false;
  for (size_t i = 0; i < m; ++i) {
    DiffMultiset acc = external_sum(f, i);
    if (!have_lambda) {
      lambda = acc.counts[1];
      have_lambda = true;
    }
    for (uint64_t x = 1; x < n; ++x) {
      if (acc.counts[x] != lambda) {
        out.reason = "external differences are not a uniform multiple of the nonzero elements";
        out.cex = Counterexample{uint32_t(i), elem_t(x), acc.counts[x], lambda};
        return out;
      }
    }
  }
  out.params = SedfParams{n, m, k, lambda};
  return out;
}

GsedfCheck verify_gsedf(const Family& f) {
  GsedfCheck out;
  if (!family_shape_ok(f, out.reason)) return out;
  const uint64_t n = f.group->n;
  const size_t m = f.sets.size();

  GsedfParams params;
  params.n = n;
  params.m = m;
  for (const auto& ls : f.sets) params.k.push_back(ls.set.size());

  for (size_t i = 0; i < m; ++i) {
    DiffMultiset acc = external_sum(f, i);
    uint64_t lam = acc.counts[1];
    for (uint64_t x = 1; x < n; ++x) {
      if (acc.counts[x] != lam) {
        out.reason = "external differences for set '" + f.sets[i].label + "' are not uniform";
        out.cex = Counterexample{uint32_t(i), elem_t(x), acc.counts[x], lam};
        return out;
      }
    }
    params.lambda.push_back(lam);
  }
  out.params = std::move(params);
  return out;
}

BgsedfCheck verify_bgsedf(const Family& f, const std::vector<uint64_t>& bounds) {
  BgsedfCheck out;
  if (!family_shape_ok(f, out.reason)) return out;
  const uint64_t n = f.group->n;
  const size_t m = f.sets.size();
  if (bounds.size() != m) {
    out.reason = "expected " + std::to_string(m) + " bounds, got " + std::to_string(bounds.size());
    return out;
  }

  out.pass = true;
  for (size_t i = 0; i < m; ++i) {
    DiffMultiset acc = external_sum(f, i);
    if (acc.counts[0] != 0) out.zero_ok = false;  // unreachable for disjoint sets
    uint64_t mx = 0;
    for (uint64_t x = 1; x < n; ++x) {
      mx = std::max(mx, acc.counts[x]);
      if (acc.counts[x] > bounds[i] && !out.cex) {
        out.cex = Counterexample{uint32_t(i), elem_t(x), acc.counts[x], bounds[i]};
      }
    }
    out.achieved.push_back(mx);
    if (mx > bounds[i]) out.pass = false;
  }
  if (!out.zero_ok) {
    out.pass = false;
    out.reason = "external differences hit 0";
  } else if (!out.pass) {
    out.reason = "per-set bound exceeded";
  }
  return out;
}

std::pair<ElementSet, DsParams> complement_ds(const ElementSet& d) {
  const GroupTable& g = d.group();
  auto params = verify_ds(d);
  if (!params) throw Error(Errc::NotADs, "input is not a difference set");
  ElementSet comp = d.complement();
  if (comp.empty()) throw Error(Errc::NotADs, "complement is empty");
  DsParams predicted{g.n, g.n - params->k,
                     uint64_t(int64_t(g.n) - 2 * int64_t(params->k) + int64_t(params->lambda))};
  auto check = verify_ds(comp);
  if (!check || check->k != predicted.k || check->lambda != predicted.lambda)
    throw Error(Errc::NotADs, "complement re-verification disagrees with prediction");
  return {std::move(comp), predicted};
}

std::pair<ElementSet, PdsParams> complement_pds(const ElementSet& d) {
  const GroupTable& g = d.group();
  auto params = verify_pds(d);  // throws ZeroInSet when 0 is present
  if (!params) throw Error(Errc::NotAPds, "input is not a partial difference set");
  if (!d.is_symmetric()) throw Error(Errc::NotSymmetric, "set is not closed under negation");
  ElementSet comp = d.complement();
  comp.erase(0);
  if (comp.empty()) throw Error(Errc::NotAPds, "punctured complement is empty");
  int64_t n = int64_t(g.n), k = int64_t(params->k);
  PdsParams predicted{g.n, uint64_t(n - k - 1), uint64_t(n - 2 * k + int64_t(params->mu) - 2),
                      uint64_t(n - 2 * k + int64_t(params->lambda))};
  auto check = verify_pds(comp);
  if (!check || check->k != predicted.k || check->lambda != predicted.lambda ||
      check->mu != predicted.mu)
    throw Error(Errc::NotAPds, "complement re-verification disagrees with prediction");
  return {std::move(comp), predicted};
}

PartitionTheoremReport check_partition_theorems(const Family& f) {
  PartitionTheoremReport out;
  std::string reason;
  if (!family_shape_ok(f, reason)) throw Error(Errc::NotAPartition, reason);

  uint64_t covered = 0;
  bool zero_covered = false;
  for (const auto& ls : f.sets) {
    covered += ls.set.size();
    if (ls.set.contains(0)) zero_covered = true;
  }
  const uint64_t n = f.group->n;
  if (covered == n && zero_covered)
    out.branch = PartitionBranch::full_group;
  else if (covered == n - 1 && !zero_covered)
    out.branch = PartitionBranch::punctured;
  else
    throw Error(Errc::NotAPartition, "sets cover neither the group nor the group minus 0");

  auto gs = verify_gsedf(f);
  out.family_side = gs.params.has_value();

  out.per_set_side = true;
  std::vector<DsParams> ds;
  std::vector<PdsParams> pds;
  for (const auto& ls : f.sets) {
    if (out.branch == PartitionBranch::full_group) {
      auto p = verify_ds(ls.set);
      if (!p) {
        out.per_set_side = false;
        out.detail = "set '" + ls.label + "' is not a difference set";
        break;
      }
      ds.push_back(*p);
    } else {
      auto p = verify_pds(ls.set);
      if (!p || p->lambda + 1 != p->mu) {
        out.per_set_side = false;
        out.detail = "set '" + ls.label + "' is not a partial difference set with lambda = mu - 1";
        break;
      }
      pds.push_back(*p);
    }
  }

  out.agree = out.family_side == out.per_set_side;
  if (out.family_side && out.per_set_side) {
    out.translation_ok = true;
    const auto& gp = *gs.params;
    for (size_t i = 0; i < f.sets.size(); ++i) {
      uint64_t k = gp.k[i], lam = gp.lambda[i];
      bool ok = out.branch == PartitionBranch::full_group
                    ? ds[i].lambda == k - lam
                    : (pds[i].lambda == k - lam - 1 && pds[i].mu == k - lam);
      if (!ok) {
        out.translation_ok = false;
        out.detail = "parameter translation fails for set '" + f.sets[i].label + "'";
        break;
      }
    }
  }
  if (out.detail.empty()) {
    out.detail = out.agree ? "both characterizations agree" : "characterizations disagree";
  }
  return out;
}

std::optional<uint64_t> feasible_sedf_lambda(uint64_t n, uint64_t m, uint64_t k) {
  if (n < 2 || m < 2 || k < 1 || m * k > n) return std::nullopt;
  uint64_t num = (m - 1) * k * k;
  if (num % (n - 1)) return std::nullopt;
  return num / (n - 1);
}

std::optional<std::vector<uint64_t>> feasible_gsedf_lambda(uint64_t n,
                                                           const std::vector<uint64_t>& ks) {
  if (n < 2 || ks.size() < 2) return std::nullopt;
  uint64_t total = 0;
  for (uint64_t k : ks) {
    if (k < 1) return std::nullopt;
    total += k;
  }
  if (total > n) return std::nullopt;
  std::vector<uint64_t> out;
  for (uint64_t k : ks) {
    uint64_t num = k * (total - k);
    if (num % (n - 1)) return std::nullopt;
    out.push_back(num / (n - 1));
  }
  return out;
}

PdsType classify_pds_type(const PdsParams& p) {
  if (p.n == 243 && p.k == 22 && p.lambda == 1 && p.mu == 2) return PdsType::order11_type;
  if (p.n % 4 == 1 && p.k == (p.n - 1) / 2 && p.lambda == (p.n - 5) / 4 && p.mu == (p.n - 1) / 4)
    return PdsType::paley_type;
  return PdsType::other;
}

const char* pds_type_name(PdsType t) {
  switch (t) {
    case PdsType::paley_type: return "paley";
    case PdsType::order11_type: return "order11";
    case PdsType::other: return "other";
  }
  return "other";
}

}  // namespace sedf
