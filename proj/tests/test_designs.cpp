// Difference multisets and the design verifiers. Oracle values were computed
// by hand / independent scripts: {0,1,3,9} is the classic (13,4,1) difference
// set, the quadratic residues mod 13 form a (13,6,2,3) partial difference
// set, and the two residue classes mod 13 form a (13,2,6,3) family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sedf/designs.hpp"

using namespace sedf;

namespace {

GroupPtr z13() { return build_group(GroupSpec::cyclic_group(13)); }
GroupPtr f13() { return build_group(GroupSpec::field(13, 1)); }

Family two_sets(GroupPtr g, const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  Family f;
  f.group = g;
  f.sets.push_back({"A", ElementSet::of(*g, a)});
  f.sets.push_back({"B", ElementSet::of(*g, b)});
  return f;
}

const std::vector<elem_t> kQr13 = {1, 3, 4, 9, 10, 12};   // squares mod 13
const std::vector<elem_t> kQn13 = {2, 5, 6, 7, 8, 11};    // non-squares

}  // namespace

TEST_CASE("difference multisets") {
  auto g = z13();
  auto a = ElementSet::of(*g, {0, 1, 3, 9});
  DiffMultiset d = delta(a, a);
  CHECK(d.total() == 16);
  CHECK(d.at(0) == 4);
  for (elem_t x = 1; x < 13; ++x) CHECK(d.at(x) == 1);  // the (13,4,1) pattern

  auto b = ElementSet::of(*g, {2, 5});
  DiffMultiset ab = delta(a, b);
  CHECK(ab.total() == 8);
  CHECK(ab.at(11) == 2);  // 0-2 and 3-5
  CHECK(ab.at(12) == 1);  // 1-2
  CHECK(ab.at(0) == 0);

  DiffMultiset acc(*g);
  accumulate_delta(acc, a, b);
  accumulate_delta(acc, b, a);
  CHECK(acc.total() == 16);
  for (elem_t x = 0; x < 13; ++x) CHECK(acc.at(x) == ab.at(x) + ab.at(g->neg(x)));

  // field vs cyclic on the same prime order agree elementwise
  auto gf = f13();
  auto af = ElementSet::of(*gf, {0, 1, 3, 9});
  DiffMultiset df = delta(af, af);
  CHECK(df.counts == d.counts);

  // char-2 path: differences equal XOR, so each pair counts twice
  auto f8 = build_group(GroupSpec::field(2, 3));
  auto s = ElementSet::of(*f8, {1, 2, 5});
  DiffMultiset d8 = delta(s, s);
  for (elem_t x : {3, 4, 7})
    CHECK(d8.at(x) == 2);
  CHECK(d8.at(6) == 0);
  CHECK(d8.at(0) == 3);
}

TEST_CASE("difference set verifier") {
  auto g = z13();
  auto params = verify_ds(ElementSet::of(*g, {0, 1, 3, 9}));
  REQUIRE(params);
  CHECK(params->n == 13);
  CHECK(params->k == 4);
  CHECK(params->lambda == 1);
  CHECK_FALSE(verify_ds(ElementSet::of(*g, {0, 1, 2, 3})));
  // whole group and trivial singleton are degenerate difference sets
  auto whole = verify_ds(ElementSet::of(*g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  REQUIRE(whole);
  CHECK(whole->lambda == 13);
  auto single = verify_ds(ElementSet::of(*g, {5}));
  REQUIRE(single);
  CHECK(single->k == 1);
  CHECK(single->lambda == 0);
}

TEST_CASE("partial difference set verifier") {
  auto g = f13();
  auto params = verify_pds(ElementSet::of(*g, kQr13));
  REQUIRE(params);
  CHECK(params->n == 13);
  CHECK(params->k == 6);
  CHECK(params->lambda == 2);
  CHECK(params->mu == 3);
  CHECK(classify_pds_type(*params) == PdsType::paley_type);

  CHECK_FALSE(verify_pds(ElementSet::of(*g, {1, 2, 3})));
  CHECK_THROWS_AS((void)verify_pds(ElementSet::of(*g, {0, 1, 12})), Error);

  // G - D - {0} empty: mu defaults to 0
  auto g5 = build_group(GroupSpec::cyclic_group(5));
  auto full = verify_pds(ElementSet::of(*g5, {1, 2, 3, 4}));
  REQUIRE(full);
  CHECK(full->k == 4);
  CHECK(full->lambda == 3);
  CHECK(full->mu == 0);
  CHECK(classify_pds_type(*full) == PdsType::other);
}

TEST_CASE("exact family verifier") {
  auto g = f13();
  Family fam = two_sets(g, kQr13, kQn13);
  SedfCheck c = verify_sedf(fam);
  REQUIRE(c.params);
  CHECK(c.params->n == 13);
  CHECK(c.params->m == 2);
  CHECK(c.params->k == 6);
  CHECK(c.params->lambda == 3);

  SUBCASE("unequal sizes fail") {
    Family bad = two_sets(g, {1, 2, 3}, {4, 5});
    auto r = verify_sedf(bad);
    CHECK_FALSE(r.params);
    CHECK_FALSE(r.reason.empty());
  }
  SUBCASE("overlapping sets fail") {
    Family bad = two_sets(g, {1, 2, 3}, {3, 4, 5});
    CHECK_FALSE(verify_sedf(bad).params);
  }
  SUBCASE("single set fails") {
    Family bad;
    bad.group = g;
    bad.sets.push_back({"A", ElementSet::of(*g, {1, 2})});
    CHECK_FALSE(verify_sedf(bad).params);
  }
  SUBCASE("non-flat families report a counterexample") {
    auto f8 = build_group(GroupSpec::field(2, 3));
    Family bad = two_sets(f8, {1}, {2});
    auto r = verify_sedf(bad);
    CHECK_FALSE(r.params);
    REQUIRE(r.cex);
    CHECK(r.cex->element == 3);  // 1 ^ 2, the only external difference
    CHECK(r.cex->got == 1);
    CHECK(r.cex->want == 0);
  }
}

TEST_CASE("per-set-level family verifier") {
  auto g = z13();
  Family fam = two_sets(g, {0, 1, 3, 9}, {2, 4, 5, 6, 7, 8, 10, 11, 12});
  GsedfCheck c = verify_gsedf(fam);
  REQUIRE(c.params);
  CHECK(c.params->k == std::vector<uint64_t>{4, 9});
  CHECK(c.params->lambda == std::vector<uint64_t>{3, 3});

  // q = 7: {C0, C1 + {0}} has k = (3,4), lambda = (2,2)
  auto g7 = build_group(GroupSpec::field(7, 1));
  Family fam7 = two_sets(g7, {1, 2, 4}, {0, 3, 5, 6});
  auto c7 = verify_gsedf(fam7);
  REQUIRE(c7.params);
  CHECK(c7.params->k == std::vector<uint64_t>{3, 4});
  CHECK(c7.params->lambda == std::vector<uint64_t>{2, 2});

  Family bad = two_sets(g, {0, 1}, {2, 3});
  CHECK_FALSE(verify_gsedf(bad).params);
}

TEST_CASE("bounded family verifier") {
  auto f9 = build_group(GroupSpec::field(3, 2));
  Family fam = two_sets(f9, {1}, {4});
  BgsedfCheck c = verify_bgsedf(fam, {1, 1});
  CHECK(c.pass);
  CHECK(c.zero_ok);
  CHECK(c.achieved == std::vector<uint64_t>{1, 1});

  auto g = f13();
  Family paley = two_sets(g, kQr13, kQn13);
  auto tight = verify_bgsedf(paley, {3, 3});
  CHECK(tight.pass);
  CHECK(tight.achieved == std::vector<uint64_t>{3, 3});
  auto loose = verify_bgsedf(paley, {2, 3});
  CHECK_FALSE(loose.pass);
  REQUIRE(loose.cex);
  CHECK(loose.cex->set_index == 0);
  CHECK(loose.cex->got == 3);
  CHECK(loose.cex->want == 2);

  auto wrong_arity = verify_bgsedf(paley, {3});
  CHECK_FALSE(wrong_arity.pass);
  CHECK_FALSE(wrong_arity.reason.empty());
}

TEST_CASE("complement identities") {
  auto g = z13();
  auto [cds, dparams] = complement_ds(ElementSet::of(*g, {0, 1, 3, 9}));
  CHECK(dparams.n == 13);
  CHECK(dparams.k == 9);
  CHECK(dparams.lambda == 6);
  CHECK(cds.elements() == std::vector<elem_t>{2, 4, 5, 6, 7, 8, 10, 11, 12});

  auto gf = f13();
  auto [cpds, pparams] = complement_pds(ElementSet::of(*gf, kQr13));
  CHECK(pparams.k == 6);
  CHECK(pparams.lambda == 2);
  CHECK(pparams.mu == 3);
  CHECK(cpds.elements() == kQn13);

  // (17,8,3,4) complements to itself parameter-wise
  auto g17 = build_group(GroupSpec::field(17, 1));
  ElementSet qr17(*g17);
  for (elem_t x = 1; x < 17; ++x) qr17.insert(elem_t(uint64_t(x) * x % 17));
  auto [c17, p17] = complement_pds(qr17);
  CHECK(p17.n == 17);
  CHECK(p17.k == 8);
  CHECK(p17.lambda == 3);
  CHECK(p17.mu == 4);

  CHECK_THROWS_AS((void)complement_ds(ElementSet::of(*g, {0, 1, 2, 3})), Error);
  CHECK_THROWS_AS((void)complement_pds(ElementSet::of(*gf, {1, 2, 3})), Error);
  CHECK_THROWS_AS((void)complement_pds(ElementSet::of(*gf, {1, 2, 11, 12})), Error);  // non-PDS
}

TEST_CASE("partition equivalences") {
  auto g = z13();

  SUBCASE("partition of G: family iff every part is a difference set") {
    Family fam = two_sets(g, {0, 1, 3, 9}, {2, 4, 5, 6, 7, 8, 10, 11, 12});
    auto r = check_partition_theorems(fam);
    CHECK(r.branch == PartitionBranch::full_group);
    CHECK(r.family_side);
    CHECK(r.per_set_side);
    CHECK(r.agree);
    CHECK(r.translation_ok);  // lambda_i = k_i - lambda_i'
  }
  SUBCASE("negative partitions still agree") {
    Family fam = two_sets(g, {0, 1}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    auto r = check_partition_theorems(fam);
    CHECK(r.branch == PartitionBranch::full_group);
    CHECK_FALSE(r.family_side);
    CHECK_FALSE(r.per_set_side);
    CHECK(r.agree);
  }
  SUBCASE("partition of G - {0}: family iff parts are qualifying PDS") {
    auto gf = f13();
    Family fam = two_sets(gf, kQr13, kQn13);
    auto r = check_partition_theorems(fam);
    CHECK(r.branch == PartitionBranch::punctured);
    CHECK(r.family_side);
    CHECK(r.per_set_side);
    CHECK(r.agree);
    CHECK(r.translation_ok);
  }
  SUBCASE("non-partitions are rejected") {
    Family fam = two_sets(g, {0, 1}, {3, 4});
    CHECK_THROWS_AS((void)check_partition_theorems(fam), Error);
  }
}

TEST_CASE("feasibility arithmetic") {
  CHECK(feasible_sedf_lambda(13, 2, 6) == 3);
  CHECK(feasible_sedf_lambda(9, 3, 2) == 1);
  CHECK(feasible_sedf_lambda(243, 11, 22) == 20);
  CHECK_FALSE(feasible_sedf_lambda(16, 3, 2));  // 8/15 is not integral
  CHECK_FALSE(feasible_sedf_lambda(10, 3, 4));  // sets cannot fit
  auto ks = feasible_gsedf_lambda(13, {4, 9});
  REQUIRE(ks);
  CHECK(*ks == std::vector<uint64_t>{3, 3});
  CHECK_FALSE(feasible_gsedf_lambda(10, {2, 3}));
}

TEST_CASE("pds parameter classification") {
  CHECK(classify_pds_type({13, 6, 2, 3}) == PdsType::paley_type);
  CHECK(classify_pds_type({17, 8, 3, 4}) == PdsType::paley_type);
  CHECK(classify_pds_type({243, 22, 1, 2}) == PdsType::order11_type);
  CHECK(classify_pds_type({13, 6, 2, 4}) == PdsType::other);
  CHECK(std::string(pds_type_name(PdsType::paley_type)) == "paley");
  CHECK(std::string(pds_type_name(PdsType::order11_type)) == "order11");
}
