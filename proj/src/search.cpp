// Diophantine scans, the budgeted exhaustive family search (canonical
// position, per-branch budget slices, optional worker threads with a
// deterministic ordered merge), and the small-order censuses.
#include "sedf/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sedf/cyclotomy.hpp"

namespace sedf {

namespace {

const std::pair<const char*, ScanKind> kScanKinds[] = {
    {"paley", ScanKind::paley},
    {"quadratic", ScanKind::quadratic},
    {"quartic_sedf", ScanKind::quartic_sedf},
    {"quartic_ds", ScanKind::quartic_ds},
    {"quartic_ds_zero", ScanKind::quartic_ds_zero},
    {"sextic", ScanKind::sextic},
    {"octic1", ScanKind::octic1},
    {"octic2", ScanKind::octic2},
    {"semiprimitive", ScanKind::semiprimitive},
};

}  // namespace

std::optional<ScanKind> scan_kind_from_name(const std::string& name) {
  for (const auto& [n, k] : kScanKinds)
    if (name == n) return k;
  return std::nullopt;
}

const char* scan_kind_name(ScanKind k) {
  for (const auto& [n, kk] : kScanKinds)
    if (kk == k) return n;
  return "?";
}

std::vector<std::string> scan_kind_names() {
  std::vector<std::string> out;
  for (const auto& [n, k] : kScanKinds) out.emplace_back(n);
  return out;
}

std::vector<ScanHit> scan_diophantine(ScanKind kind, uint64_t q_max) {
  std::vector<ScanHit> out;
  for (uint64_t q = 2; q <= q_max; ++q) {
    auto pp = as_prime_power(q);
    if (!pp) continue;
    ScanHit hit;
    hit.q = q;
    hit.p = pp->first;
    hit.m = pp->second;
    bool ok = false;
    switch (kind) {
      case ScanKind::paley:
        ok = q % 4 == 1;
        break;
      case ScanKind::quadratic:
        ok = q % 4 == 3;
        break;
      case ScanKind::quartic_sedf:
        if (auto t = quadratic_witness(q, 1, 16); t && *t >= 1) {
          ok = true;
          hit.witness["t"] = *t;
        }
        break;
      case ScanKind::quartic_ds:
        if (auto t = quadratic_witness(q, 1, 4); t && *t % 2 == 1) {
          ok = true;
          hit.witness["t"] = *t;
        }
        break;
      case ScanKind::quartic_ds_zero:
        if (auto t = quadratic_witness(q, 9, 4); t && *t % 2 == 1) {
          ok = true;
          hit.witness["t"] = *t;
        }
        break;
      case ScanKind::sextic:
        if (auto t = quadratic_witness(q, 1, 108); t && *t >= 1) {
          ok = true;
          hit.witness["t"] = *t;
        }
        break;
      case ScanKind::octic1: {
        auto y = quadratic_witness(q, 9, 64);
        auto b = quadratic_witness(q, 1, 8);
        if (y && b && *y % 2 == 1) {
          ok = true;
          hit.witness["y"] = *y;
          hit.witness["b"] = *b;
        }
        break;
      }
      case ScanKind::octic2: {
        auto y = quadratic_witness(q, 441, 64);
        auto b = quadratic_witness(q, 49, 8);
        if (y && b) {
          ok = true;
          hit.witness["y"] = *y;
          hit.witness["b"] = *b;
        }
        break;
      }
      case ScanKind::semiprimitive:
        if (pp->second % 2 == 0) {
          ok = true;
          hit.witness["l"] = pp->second / 2;
        }
        break;
    }
    if (ok) out.push_back(std::move(hit));
  }
  return out;
}

namespace {

// One branch of the family search: A1 = {0} or {0, s} fixed, then a
// depth-first extension keeping every running external count <= lambda.
// Counts only grow as elements are added, so the cut is sound; at a full
// leaf, the count total forced by the parameters turns the bound into
// equality, so leaves are exactly the families sought.
struct SedfBranch {
  const GroupTable& g;
  uint32_t m, k;
  uint64_t lambda;
  uint64_t slice;
  uint64_t nodes = 0;
  bool exhausted = false;

  std::vector<std::vector<elem_t>> sets;
  std::vector<std::vector<uint32_t>> cnt;  // per set: external difference counts
  std::vector<char> used;
  std::vector<std::vector<std::vector<elem_t>>> found;  // flat element lists

  SedfBranch(const GroupTable& gt, uint32_t m_, uint32_t k_, uint64_t lambda_, uint64_t slice_)
      : g(gt), m(m_), k(k_), lambda(lambda_), slice(slice_) {
    sets.resize(m);
    cnt.assign(m, std::vector<uint32_t>(g.n, 0));
    used.assign(g.n, 0);
  }

  bool add(uint32_t i, elem_t x) {
    bool ok = true;
    for (uint32_t j = 0; j < m; ++j) {
      if (j == i) continue;
      auto& cj = cnt[j];
      auto& ci = cnt[i];
      for (elem_t y : sets[j]) {
        if (++ci[g.sub(x, y)] > lambda) ok = false;
        if (++cj[g.sub(y, x)] > lambda) ok = false;
      }
    }
    sets[i].push_back(x);
    used[x] = 1;
    return ok;
  }

  void remove(uint32_t i) {
    elem_t x = sets[i].back();
    sets[i].pop_back();
    used[x] = 0;
    for (uint32_t j = 0; j < m; ++j) {
      if (j == i) continue;
      for (elem_t y : sets[j]) {
        cnt[i][g.sub(x, y)]--;
        cnt[j][g.sub(y, x)]--;
      }
    }
  }

  void dfs(uint32_t idx) {
    if (exhausted) return;
    if (sets[idx].size() == k) {
      if (idx + 1 == m) {
        found.push_back(sets);
        return;
      }
      // Start the next set; its minimum must exceed this set's minimum.
      for (uint64_t s = sets[idx][0] + 1; s < g.n; ++s) {
        if (used[s]) continue;
        if (g.n - s < k) break;  // not enough room for a full ascending set
        if (++nodes > slice) {
          exhausted = true;
          return;
        }
        bool ok = add(idx + 1, elem_t(s));
        if (ok) dfs(idx + 1);
        remove(idx + 1);
        if (exhausted) return;
      }
      return;
    }
    uint64_t need = k - sets[idx].size();
    for (uint64_t x = sets[idx].back() + 1; x < g.n; ++x) {
      if (used[x]) continue;
      if (g.n - x < need) break;
      if (++nodes > slice) {
        exhausted = true;
        return;
      }
      bool ok = add(idx, elem_t(x));
      if (ok) dfs(idx);
      remove(idx);
      if (exhausted) return;
    }
  }
};

}  // namespace

SearchOutcome exhaustive_sedf(const SearchConfig& cfg) {
  if (!cfg.group) throw Error(Errc::BadInput, "search needs a group");
  if (cfg.m < 2 || cfg.k < 1) throw Error(Errc::BadInput, "need m >= 2 and k >= 1");
  const GroupTable& g = *cfg.group;

  SearchOutcome out;
  out.lambda = feasible_sedf_lambda(g.n, cfg.m, cfg.k);
  if (!out.lambda) return out;  // counting conditions already rule families out

  // Branch on the second element of A1 (the whole search is one branch when
  // k = 1); equal budget slices make results worker-count independent.
  std::vector<elem_t> seconds;
  if (cfg.k == 1) {
    seconds.push_back(0);  // sentinel: no second element
  } else {
    for (uint64_t s = 1; s + (cfg.k - 2) < g.n; ++s) seconds.push_back(elem_t(s));
  }
  uint64_t slice = cfg.node_budget == UINT64_MAX
                       ? UINT64_MAX
                       : std::max<uint64_t>(1, cfg.node_budget / seconds.size());

  struct BranchResult {
    std::vector<std::vector<std::vector<elem_t>>> found;
    uint64_t nodes = 0;
    bool exhausted = false;
  };
  std::vector<BranchResult> results(seconds.size());

  auto run_branch = [&](size_t idx) {
    SedfBranch b(g, cfg.m, cfg.k, *out.lambda, slice);
    b.add(0, 0);
    if (cfg.k >= 2) b.add(0, seconds[idx]);
    b.dfs(0);
    results[idx] = {std::move(b.found), b.nodes, b.exhausted};
  };

  uint32_t workers = std::max(1u, cfg.workers);
  if (workers == 1 || seconds.size() <= 1) {
    for (size_t i = 0; i < seconds.size(); ++i) run_branch(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < seconds.size(); i = next.fetch_add(1))
        run_branch(i);
    };
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < std::min<size_t>(workers, seconds.size()); ++w)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (size_t i = 0; i < results.size(); ++i) {
    out.nodes += results[i].nodes;
    if (results[i].exhausted) out.exhaustive = false;
    for (const auto& sets : results[i].found) {
      Family fam;
      fam.group = cfg.group;
      for (uint32_t s = 0; s < cfg.m; ++s)
        fam.sets.push_back({"A" + std::to_string(s + 1), ElementSet::of(g, sets[s])});
      out.families.push_back(std::move(fam));
    }
  }
  return out;
}

Family canonicalize_family(const Family& f) {
  if (!f.group || f.sets.empty()) throw Error(Errc::BadInput, "empty family");
  const GroupTable& g = *f.group;
  elem_t gmin = elem_t(g.n);
  for (const auto& ls : f.sets)
    for (elem_t x : ls.set.elements()) gmin = std::min(gmin, x);
  std::vector<std::vector<elem_t>> translated;
  for (const auto& ls : f.sets) {
    std::vector<elem_t> xs;
    for (elem_t x : ls.set.elements()) xs.push_back(g.sub(x, gmin));
    std::sort(xs.begin(), xs.end());
    translated.push_back(std::move(xs));
  }
  std::sort(translated.begin(), translated.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Family out;
  out.group = f.group;
  for (size_t i = 0; i < translated.size(); ++i)
    out.sets.push_back({"A" + std::to_string(i + 1), ElementSet::of(g, translated[i])});
  return out;
}

namespace {

// Orbit DFS for the constrained census: D symmetric, 0 excluded, so D is a
// union of {x, -x} orbits; counts stay below mu or the branch dies.
struct PdsSearch {
  const GroupTable& g;
  uint64_t k, lambda, mu;
  const std::vector<std::vector<elem_t>>& orbits;
  std::vector<uint64_t> suffix_size;  // total orbit size from index i on

  std::vector<elem_t> d;
  std::vector<char> in_d;
  std::vector<uint32_t> cnt;
  std::vector<std::vector<elem_t>> found;

  PdsSearch(const GroupTable& gt, uint64_t k_, uint64_t mu_,
            const std::vector<std::vector<elem_t>>& orbs)
      : g(gt), k(k_), lambda(mu_ - 1), mu(mu_), orbits(orbs) {
    in_d.assign(g.n, 0);
    cnt.assign(g.n, 0);
    suffix_size.assign(orbits.size() + 1, 0);
    for (size_t i = orbits.size(); i-- > 0;)
      suffix_size[i] = suffix_size[i + 1] + orbits[i].size();
  }

  bool include(const std::vector<elem_t>& orb) {
    bool ok = true;
    for (elem_t a : orb) {
      for (elem_t b : d) {
        if (++cnt[g.sub(a, b)] > mu) ok = false;
        if (++cnt[g.sub(b, a)] > mu) ok = false;
      }
    }
    for (elem_t a : orb)
      for (elem_t b : orb)
        if (a != b && ++cnt[g.sub(a, b)] > mu) ok = false;
    for (elem_t a : orb) {
      d.push_back(a);
      in_d[a] = 1;
    }
    return ok;
  }

  void exclude(const std::vector<elem_t>& orb) {
    for (size_t i = 0; i < orb.size(); ++i) {
      in_d[d.back()] = 0;
      d.pop_back();
    }
    for (elem_t a : orb)
      for (elem_t b : orb)
        if (a != b) cnt[g.sub(a, b)]--;
    for (elem_t a : orb)
      for (elem_t b : d) {
        cnt[g.sub(a, b)]--;
        cnt[g.sub(b, a)]--;
      }
  }

  void dfs(size_t idx) {
    if (d.size() == k) {
      for (uint64_t x = 1; x < g.n; ++x)
        if (cnt[x] != (in_d[x] ? lambda : mu)) return;
      std::vector<elem_t> sorted = d;
      std::sort(sorted.begin(), sorted.end());
      found.push_back(std::move(sorted));
      return;
    }
    if (idx == orbits.size() || d.size() + suffix_size[idx] < k) return;
    if (d.size() + orbits[idx].size() <= k) {
      if (include(orbits[idx])) dfs(idx + 1);
      exclude(orbits[idx]);
    }
    dfs(idx + 1);
  }
};

}  // namespace

PdsCensusResult pds_census(GroupPtr group, CensusMode mode) {
  if (!group) throw Error(Errc::BadInput, "census needs a group");
  const GroupTable& g = *group;
  PdsCensusResult res;

  if (mode == CensusMode::classes) {
    if (!g.is_field()) throw Error(Errc::NotAField, "class census needs a field");
    uint64_t qm1 = g.n - 1;
    for (uint64_t e = 2; e <= qm1; ++e) {
      if (qm1 % e) continue;
      auto cyc = build_cyclotomy(group, uint32_t(e));
      if (cyc.f * 2 >= g.n) continue;  // k < n/2 constraint
      for (uint32_t i = 0; i < e; ++i) {
        const ElementSet& cls = cyc.classes[i];
        if (!cls.is_symmetric()) continue;
        auto p = verify_pds(cls);
        if (!p || p->lambda + 1 != p->mu) continue;
        PdsCensusEntry entry;
        entry.label = "e=" + std::to_string(e) + ",C" + std::to_string(i);
        entry.elements = cls.elements();
        entry.params = *p;
        entry.type = classify_pds_type(*p);
        if (entry.type == PdsType::other) res.found_other = true;
        res.entries.push_back(std::move(entry));
      }
    }
    return res;
  }

  if (g.n > 64) throw Error(Errc::OrderTooLarge, "exhaustive census is limited to n <= 64");
  std::vector<std::vector<elem_t>> orbits;
  for (uint64_t x = 1; x < g.n; ++x) {
    elem_t nx = g.neg(elem_t(x));
    if (x < nx)
      orbits.push_back({elem_t(x), nx});
    else if (x == nx)
      orbits.push_back({elem_t(x)});
  }

  for (uint64_t k = 1; 2 * k < g.n; ++k) {
    if ((k * k) % (g.n - 1)) continue;  // mu = k^2/(n-1) must be integral
    uint64_t mu = k * k / (g.n - 1);
    if (mu < 1) continue;  // lambda = mu - 1 must be a count
    PdsSearch search(g, k, mu, orbits);
    search.dfs(0);
    uint32_t ordinal = 0;
    for (auto& elems : search.found) {
      PdsCensusEntry entry;
      entry.label = "k=" + std::to_string(k) + "#" + std::to_string(ordinal++);
      entry.params = PdsParams{g.n, k, mu - 1, mu};
      entry.elements = std::move(elems);
      entry.type = classify_pds_type(entry.params);
      if (entry.type == PdsType::other) res.found_other = true;
      res.entries.push_back(std::move(entry));
    }
  }
  return res;
}

namespace {

// Ascending-element DFS for difference sets through 0; the lambda cut is
// sound because internal counts only grow.
struct DsSearch {
  const GroupTable& g;
  uint64_t k, lambda;
  std::vector<elem_t> d;
  std::vector<uint32_t> cnt;
  std::vector<std::vector<elem_t>> found;

  DsSearch(const GroupTable& gt, uint64_t k_, uint64_t lambda_) : g(gt), k(k_), lambda(lambda_) {
    cnt.assign(g.n, 0);
  }

  bool add(elem_t x) {
    bool ok = true;
    for (elem_t b : d) {
      if (++cnt[g.sub(x, b)] > lambda) ok = false;
      if (++cnt[g.sub(b, x)] > lambda) ok = false;
    }
    d.push_back(x);
    return ok;
  }

  void remove() {
    elem_t x = d.back();
    d.pop_back();
    for (elem_t b : d) {
      cnt[g.sub(x, b)]--;
      cnt[g.sub(b, x)]--;
    }
  }

  void dfs() {
    if (d.size() == k) {
      // Bounded counts with the exact forced total: equality holds.
      found.push_back(d);
      return;
    }
    uint64_t need = k - d.size();
    for (uint64_t x = d.back() + 1; x < g.n; ++x) {
      if (g.n - x < need) break;
      if (add(elem_t(x))) dfs();
      remove();
    }
  }
};

}  // namespace

std::vector<DsCensusEntry> ds_census(GroupPtr group, uint64_t lambda_cap) {
  if (!group) throw Error(Errc::BadInput, "census needs a group");
  const GroupTable& g = *group;
  std::vector<DsCensusEntry> out;
  for (uint64_t k = 1; 2 * k <= g.n; ++k) {
    uint64_t num = k * (k - 1);
    if (num % (g.n - 1)) continue;
    uint64_t lambda = num / (g.n - 1);
    if (lambda > lambda_cap) continue;
    DsSearch search(g, k, lambda);
    search.add(0);
    search.dfs();
    for (auto& elems : search.found)
      out.push_back({std::move(elems), DsParams{g.n, k, lambda}});
  }
  return out;
}

}  // namespace sedf
