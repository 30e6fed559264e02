// Diophantine scans, the exhaustive family search, and the small-order
// censuses. Counts below were frozen from an independent brute-force script:
// Z_13 has exactly 12 canonical (13,2,6,3) families, F_9 has six (9,4,1,2)
// partial difference sets, Z_7/Z_11/Z_13 have 6/10/16 small difference sets
// through 0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sedf/constructions.hpp"
#include "sedf/search.hpp"

using namespace sedf;

namespace {

std::vector<uint64_t> hit_orders(ScanKind kind, uint64_t q_max) {
  std::vector<uint64_t> out;
  for (const auto& h : scan_diophantine(kind, q_max)) out.push_back(h.q);
  return out;
}

std::vector<std::vector<elem_t>> family_elements(const Family& f) {
  std::vector<std::vector<elem_t>> out;
  for (const auto& ls : f.sets) out.push_back(ls.set.elements());
  return out;
}

bool contains_family(const SearchOutcome& out, const std::vector<std::vector<elem_t>>& want) {
  for (const auto& f : out.families)
    if (family_elements(f) == want) return true;
  return false;
}

}  // namespace

TEST_CASE("diophantine scans") {
  CHECK(hit_orders(ScanKind::paley, 30) == std::vector<uint64_t>{5, 9, 13, 17, 25, 29});
  CHECK(hit_orders(ScanKind::quadratic, 30) == std::vector<uint64_t>{3, 7, 11, 19, 23, 27});
  CHECK(hit_orders(ScanKind::quartic_sedf, 300) == std::vector<uint64_t>{17, 257});
  CHECK(hit_orders(ScanKind::quartic_ds, 150) == std::vector<uint64_t>{5, 37, 101});
  CHECK(hit_orders(ScanKind::quartic_ds_zero, 150) == std::vector<uint64_t>{13, 109});
  CHECK(hit_orders(ScanKind::sextic, 500) == std::vector<uint64_t>{109, 433});
  CHECK(hit_orders(ScanKind::semiprimitive, 50) == std::vector<uint64_t>{4, 9, 16, 25, 49});

  auto octic1 = scan_diophantine(ScanKind::octic1, 100);
  REQUIRE(octic1.size() == 1);
  CHECK(octic1[0].q == 73);
  CHECK(octic1[0].witness.at("y") == 1);
  CHECK(octic1[0].witness.at("b") == 3);

  auto octic2 = scan_diophantine(ScanKind::octic2, 30000);
  REQUIRE(octic2.size() == 1);
  CHECK(octic2[0].q == 26041);
  CHECK(octic2[0].witness.at("y") == 20);
  CHECK(octic2[0].witness.at("b") == 57);

  auto quartic = scan_diophantine(ScanKind::quartic_sedf, 300);
  CHECK(quartic[0].witness.at("t") == 1);
  CHECK(quartic[1].witness.at("t") == 4);

  for (const auto& name : scan_kind_names()) {
    auto k = scan_kind_from_name(name);
    REQUIRE(k);
    CHECK(scan_kind_name(*k) == name);
  }
  CHECK_FALSE(scan_kind_from_name("nonsense"));
}

TEST_CASE("exhaustive search enumerates all canonical families") {
  SearchConfig cfg;
  cfg.group = build_group(GroupSpec::cyclic_group(13));
  cfg.m = 2;
  cfg.k = 6;
  SearchOutcome out = exhaustive_sedf(cfg);
  CHECK(out.exhaustive);
  CHECK(out.families.size() == 12);
  CHECK(out.lambda == 3);
  CHECK(out.nodes > 0);

  // every result is in canonical position and re-verifies
  for (const auto& f : out.families) {
    CHECK(f.sets[0].set.contains(0));
    CHECK(f.sets[0].set.elements()[0] <= f.sets[1].set.elements()[0]);
    auto check = verify_sedf(f);
    REQUIRE(check.params);
    CHECK(check.params->lambda == 3);
  }

  // the halved-multiplicative-group pair appears (canonical translate)
  CHECK(contains_family(out, {{0, 2, 3, 8, 9, 11}, {1, 4, 5, 6, 7, 10}}));
}

TEST_CASE("search respects infeasibility and trivial cases") {
  SUBCASE("non-integral level") {
    SearchConfig cfg;
    cfg.group = build_group(GroupSpec::cyclic_group(16));
    cfg.m = 3;
    cfg.k = 2;
    auto out = exhaustive_sedf(cfg);
    CHECK(out.exhaustive);
    CHECK(out.families.empty());
    CHECK_FALSE(out.lambda);
  }
  SUBCASE("feasible level but no families") {
    SearchConfig cfg;
    cfg.group = build_group(GroupSpec::cyclic_group(9));
    cfg.m = 3;
    cfg.k = 2;
    auto out = exhaustive_sedf(cfg);
    CHECK(out.exhaustive);
    CHECK(out.lambda == 1);
    CHECK(out.families.empty());

    cfg.group = build_group(GroupSpec::field(3, 2));
    out = exhaustive_sedf(cfg);
    CHECK(out.exhaustive);
    CHECK(out.families.empty());
  }
  SUBCASE("all singletons") {
    SearchConfig cfg;
    cfg.group = build_group(GroupSpec::cyclic_group(5));
    cfg.m = 5;
    cfg.k = 1;
    auto out = exhaustive_sedf(cfg);
    CHECK(out.lambda == 1);
    REQUIRE(out.families.size() == 1);
    CHECK(family_elements(out.families[0]) ==
          std::vector<std::vector<elem_t>>{{0}, {1}, {2}, {3}, {4}});
  }
  SUBCASE("quartic family is rediscovered in the prime field") {
    SearchConfig cfg;
    cfg.group = build_group(GroupSpec::cyclic_group(17));
    cfg.m = 2;
    cfg.k = 4;
    auto out = exhaustive_sedf(cfg);
    CHECK(out.exhaustive);
    CHECK(!out.families.empty());
    // the quartic family lives in F_17; element encodings match Z_17
    auto built = quartic_sedf(17, 0);
    const Family& quartic = built[0].family;
    Family fixed{cfg.group, {}};
    for (const auto& ls : quartic.sets)
      fixed.sets.push_back({ls.label, ElementSet::of(*cfg.group, ls.set.elements())});
    CHECK(contains_family(out, family_elements(canonicalize_family(fixed))));
  }
}

TEST_CASE("search budget and worker determinism") {
  SearchConfig cfg;
  cfg.group = build_group(GroupSpec::cyclic_group(13));
  cfg.m = 2;
  cfg.k = 6;

  SUBCASE("budget exhaustion is reported") {
    cfg.node_budget = 5;
    auto out = exhaustive_sedf(cfg);
    CHECK_FALSE(out.exhaustive);
    CHECK(out.nodes <= 12 * 5 + 12);  // per-branch slices
  }
  SUBCASE("identical results for any worker count") {
    auto base = exhaustive_sedf(cfg);
    for (uint32_t workers : {2u, 3u, 8u}) {
      cfg.workers = workers;
      auto out = exhaustive_sedf(cfg);
      CHECK(out.exhaustive == base.exhaustive);
      CHECK(out.nodes == base.nodes);
      REQUIRE(out.families.size() == base.families.size());
      for (size_t i = 0; i < out.families.size(); ++i)
        CHECK(family_elements(out.families[i]) == family_elements(base.families[i]));
    }
  }
}

TEST_CASE("canonicalization maps translates into the result list") {
  auto g = build_group(GroupSpec::cyclic_group(13));
  SearchConfig cfg;
  cfg.group = g;
  cfg.m = 2;
  cfg.k = 6;
  auto out = exhaustive_sedf(cfg);

  // translate by 7 and swap set order; canonicalization restores a member
  const Family& f = out.families[3];
  Family shifted{g, {}};
  for (int idx : {1, 0}) {
    std::vector<elem_t> moved;
    for (elem_t x : f.sets[idx].set.elements()) moved.push_back(g->add(x, 7));
    shifted.sets.push_back({"X" + std::to_string(idx), ElementSet::of(*g, moved)});
  }
  Family canon = canonicalize_family(shifted);
  CHECK(contains_family(out, family_elements(canon)));
  CHECK(canon.sets[0].set.contains(0));

  // idempotent on canonical families
  CHECK(family_elements(canonicalize_family(f)) == family_elements(f));
}

TEST_CASE("partial difference set census") {
  SUBCASE("prime field, exhaustive") {
    auto g = build_group(GroupSpec::field(13, 1));
    auto res = pds_census(g, CensusMode::exhaustive);
    CHECK_FALSE(res.found_other);
    REQUIRE(res.entries.size() == 2);
    CHECK(res.entries[0].elements == std::vector<elem_t>{1, 3, 4, 9, 10, 12});
    CHECK(res.entries[1].elements == std::vector<elem_t>{2, 5, 6, 7, 8, 11});
    for (const auto& e : res.entries) {
      CHECK(e.type == PdsType::paley_type);
      CHECK(e.params.lambda == 2);
      CHECK(e.params.mu == 3);
    }
  }
  SUBCASE("nine-element field has six qualifying sets") {
    auto g = build_group(GroupSpec::field(3, 2));
    auto res = pds_census(g, CensusMode::exhaustive);
    CHECK_FALSE(res.found_other);
    REQUIRE(res.entries.size() == 6);
    std::vector<std::vector<elem_t>> found;
    for (const auto& e : res.entries) {
      CHECK(e.params.k == 4);
      CHECK(e.params.lambda == 1);
      CHECK(e.params.mu == 2);
      CHECK(e.type == PdsType::paley_type);
      found.push_back(e.elements);
    }
    std::sort(found.begin(), found.end());
    CHECK(found == std::vector<std::vector<elem_t>>{{1, 2, 3, 6},
                                                    {1, 2, 4, 8},
                                                    {1, 2, 5, 7},
                                                    {3, 4, 6, 8},
                                                    {3, 5, 6, 7},
                                                    {4, 5, 7, 8}});
  }
  SUBCASE("cyclic groups work in exhaustive mode") {
    auto g = build_group(GroupSpec::cyclic_group(5));
    auto res = pds_census(g, CensusMode::exhaustive);
    REQUIRE(res.entries.size() == 2);
    CHECK(res.entries[0].elements == std::vector<elem_t>{1, 4});
    CHECK(res.entries[1].elements == std::vector<elem_t>{2, 3});
  }
  SUBCASE("class mode scans cyclotomic classes only") {
    auto g = build_group(GroupSpec::field(3, 5));
    auto res = pds_census(g, CensusMode::classes);
    CHECK_FALSE(res.found_other);
    REQUIRE(res.entries.size() == 11);
    for (const auto& e : res.entries) {
      CHECK(e.type == PdsType::order11_type);
      CHECK(e.params.k == 22);
      CHECK(e.params.lambda == 1);
      CHECK(e.params.mu == 2);
      CHECK(e.label.substr(0, 5) == "e=11,");
    }

    auto f13 = build_group(GroupSpec::field(13, 1));
    auto res13 = pds_census(f13, CensusMode::classes);
    CHECK(res13.entries.size() == 2);  // the two halves, via e = 2
  }
  SUBCASE("mode and size guards") {
    auto cyc = build_group(GroupSpec::cyclic_group(13));
    CHECK_THROWS_AS((void)pds_census(cyc, CensusMode::classes), Error);
    auto big = build_group(GroupSpec::cyclic_group(65));
    CHECK_THROWS_AS((void)pds_census(big, CensusMode::exhaustive), Error);
  }
}

TEST_CASE("difference set census") {
  // the singleton {0} is a legitimate (n,1,0) entry and always leads
  auto z7 = build_group(GroupSpec::cyclic_group(7));
  auto c7 = ds_census(z7);
  REQUIRE(c7.size() == 7);
  CHECK(c7[0].elements == std::vector<elem_t>{0});
  CHECK(c7[1].elements == std::vector<elem_t>{0, 1, 3});
  for (size_t i = 1; i < c7.size(); ++i) {
    CHECK(c7[i].params.k == 3);
    CHECK(c7[i].params.lambda == 1);
    CHECK(c7[i].elements[0] == 0);
  }

  auto z13 = build_group(GroupSpec::cyclic_group(13));
  CHECK(ds_census(z13).size() == 17);  // {0} plus 16 planar (13,4,1) sets
  auto z11 = build_group(GroupSpec::cyclic_group(11));
  auto c11 = ds_census(z11);
  REQUIRE(c11.size() == 11);  // {0} plus 10 biplanar (11,5,2) sets
  for (size_t i = 1; i < c11.size(); ++i) CHECK(c11[i].params.lambda == 2);

  // the cap hides everything except the trivial singleton
  auto only_trivial = ds_census(z7, 0);
  REQUIRE(only_trivial.size() == 1);
  CHECK(only_trivial[0].params.k == 1);

  // field and cyclic censuses agree on prime order
  auto f13 = build_group(GroupSpec::field(13, 1));
  auto cf = ds_census(f13);
  REQUIRE(cf.size() == 17);
  CHECK(cf[1].elements == std::vector<elem_t>{0, 1, 3, 9});
}
