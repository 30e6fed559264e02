// Group/field construction and arithmetic. Expected tables below were
// computed independently (polynomial arithmetic from first principles) and
// frozen: canonical modulus = monic irreducible with the smallest encoding,
// canonical theta = smallest encoding of multiplicative order q-1.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sedf/group.hpp"

using namespace sedf;

TEST_CASE("primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(10007));
  CHECK(is_prime(26041));  // the first octic plus-zero field order
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(26043));

  auto pp = as_prime_power(8);
  REQUIRE(pp);
  CHECK(pp->first == 2);
  CHECK(pp->second == 3);
  pp = as_prime_power(243);
  REQUIRE(pp);
  CHECK(pp->first == 3);
  CHECK(pp->second == 5);
  pp = as_prime_power(1024);
  REQUIRE(pp);
  CHECK(pp->first == 2);
  CHECK(pp->second == 10);
  pp = as_prime_power(26041);
  REQUIRE(pp);
  CHECK(pp->first == 26041);
  CHECK(pp->second == 1);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(as_prime_power(1));
  CHECK_FALSE(as_prime_power(0));
  CHECK_FALSE(as_prime_power(100));  // 10^2 is not a prime power

  CHECK(prime_factors(12) == std::vector<uint64_t>{2, 3});
  CHECK(prime_factors(26041) == std::vector<uint64_t>{26041});
  CHECK(exact_sqrt(49) == 7);
  CHECK_FALSE(exact_sqrt(48));
}

TEST_CASE("cyclic group arithmetic") {
  auto g = build_group(GroupSpec::cyclic_group(13));
  CHECK(g->n == 13);
  CHECK(g->kind == GroupKind::cyclic);
  CHECK(g->add(5, 9) == 1);
  CHECK(g->sub(3, 10) == 6);
  CHECK(g->neg(4) == 9);
  CHECK(g->neg(0) == 0);
  for (elem_t a = 0; a < 13; ++a)
    for (elem_t b = 0; b < 13; ++b) CHECK(g->add(a, b) == (a + b) % 13);
}

TEST_CASE("canonical field tables match the independent computation") {
  struct Expect {
    uint32_t p, m;
    std::vector<uint32_t> modulus;
    elem_t theta;
    std::vector<elem_t> antilog_prefix;
  };
  const Expect cases[] = {
      {3, 1, {0, 1}, 2, {1, 2}},
      {3, 2, {1, 0, 1}, 4, {1, 4, 6, 7, 2, 8, 3, 5}},
      {2, 3, {1, 1, 0, 1}, 2, {1, 2, 4, 3, 6, 7, 5}},
      {13, 1, {0, 1}, 2, {1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7}},
      {2, 4, {1, 1, 0, 0, 1}, 2, {1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14}},
      {17, 1, {0, 1}, 3, {1, 3, 9, 10, 13, 5, 15, 11, 16, 14, 8, 7}},
      {73, 1, {0, 1}, 5, {1, 5, 25, 52, 41, 59, 3, 15, 2, 10, 50, 31}},
      {5, 2, {2, 0, 1}, 6, {1, 6, 14, 5, 8, 21, 3, 18, 7, 15, 19, 13}},
      {3, 3, {1, 2, 0, 1}, 3, {1, 3, 9, 5, 15, 23, 13, 17, 20, 4, 12, 14}},
      {7, 2, {1, 0, 1}, 9, {}},
      {11, 2, {1, 0, 1}, 15, {}},
      {3, 5, {1, 2, 0, 0, 0, 1}, 3, {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.m);
    auto g = build_group(GroupSpec::field(c.p, c.m));
    CHECK(g->spec.modulus == c.modulus);
    CHECK(g->theta == c.theta);
    for (size_t i = 0; i < c.antilog_prefix.size(); ++i) CHECK(g->antilog[i] == c.antilog_prefix[i]);
    CHECK(g->elem_order(g->theta) == g->n - 1);
  }
}

TEST_CASE("field addition: char 2, prime, and general digit paths") {
  auto f9 = build_group(GroupSpec::field(3, 2));
  CHECK(f9->sub(1, 4) == 6);  // 1 - (1+x) = -x = 2x
  CHECK(f9->add(4, 8) == 0);  // (1+x) + (2+2x) = 0
  auto f8 = build_group(GroupSpec::field(2, 3));
  for (elem_t a = 0; a < 8; ++a)
    for (elem_t b = 0; b < 8; ++b) CHECK(f8->add(a, b) == (a ^ b));
  auto f25 = build_group(GroupSpec::field(5, 2));
  for (elem_t a = 0; a < 25; ++a)
    for (elem_t b = 0; b < 25; ++b) {
      elem_t lo = (a % 5 + b % 5) % 5, hi = (a / 5 + b / 5) % 5;
      CHECK(f25->add(a, b) == lo + 5 * hi);
    }
}

TEST_CASE("multiplication, inverses, powers, element orders") {
  auto f9 = build_group(GroupSpec::field(3, 2));
  CHECK(f9->mul(0, 5) == 0);
  CHECK(f9->pow(0, 0) == 1);
  CHECK(f9->elem_order(2) == 2);   // 2 = theta^4
  CHECK(f9->elem_order(4) == 8);   // theta
  CHECK(f9->elem_order(6) == 4);   // theta^2
  CHECK_THROWS_AS((void)f9->inv(0), Error);
  for (elem_t a = 1; a < 9; ++a) {
    CHECK(f9->mul(a, f9->inv(a)) == 1);
    CHECK((f9->n - 1) % f9->elem_order(a) == 0);
  }
  // distributivity and associativity, exhaustive on F_9
  for (elem_t a = 0; a < 9; ++a)
    for (elem_t b = 0; b < 9; ++b) {
      CHECK(f9->mul(a, b) == f9->mul(b, a));
      for (elem_t c = 0; c < 9; ++c) {
        CHECK(f9->mul(a, f9->mul(b, c)) == f9->mul(f9->mul(a, b), c));
        CHECK(f9->mul(a, f9->add(b, c)) == f9->add(f9->mul(a, b), f9->mul(a, c)));
      }
    }
}

TEST_CASE("group laws hold on every element (sampled orders)") {
  for (auto spec : {GroupSpec::cyclic_group(24), GroupSpec::field(2, 5), GroupSpec::field(5, 2),
                    GroupSpec::field(31, 1)}) {
    auto g = build_group(spec);
    for (elem_t a = 0; a < g->n; ++a) {
      CHECK(g->add(a, 0) == a);
      CHECK(g->add(a, g->neg(a)) == 0);
      for (elem_t b = 0; b < g->n; ++b) {
        CHECK(g->add(a, b) == g->add(b, a));
        CHECK(g->sub(a, b) == g->add(a, g->neg(b)));
      }
    }
  }
}

TEST_CASE("modulus and theta overrides") {
  // x^2 + 2x + 2 is irreducible over F_3; a non-canonical representation.
  std::vector<uint32_t> alt{2, 2, 1};
  auto g = build_group(GroupSpec::field(3, 2), &alt);
  CHECK(g->spec.modulus == alt);
  CHECK(g->elem_order(g->theta) == 8);
  for (elem_t a = 1; a < 9; ++a) CHECK(g->mul(a, g->inv(a)) == 1);

  // 6 is a primitive root mod 13; antilog starts 1, 6 instead of 1, 2.
  auto g13 = build_group(GroupSpec::field(13, 1), nullptr, elem_t(6));
  CHECK(g13->theta == 6);
  CHECK(g13->antilog[1] == 6);
  CHECK(g13->elem_order(6) == 12);

  GroupSpec with_mod = GroupSpec::field(3, 2);
  with_mod.modulus = alt;  // spec-embedded modulus is honored too
  auto g2 = build_group(with_mod);
  CHECK(g2->spec.modulus == alt);
}

TEST_CASE("construction errors carry specific codes") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::BadInput;  // unreachable marker for "did not throw"
  };
  CHECK(code_of([] { build_group(GroupSpec::cyclic_group(1)); }) == Errc::BadInput);
  CHECK(code_of([] { build_group(GroupSpec::field(6, 2)); }) == Errc::NotPrime);
  CHECK(code_of([] { build_group(GroupSpec::field(0, 2)); }) == Errc::NotPrime);
  CHECK(code_of([] { build_group(GroupSpec::field(2, 0)); }) == Errc::BadInput);
  CHECK(code_of([] {
          std::vector<uint32_t> red{1, 0, 1};  // x^2+1 = (x+1)^2 over F_2
          build_group(GroupSpec::field(2, 2), &red);
        }) == Errc::ReducibleModulus);
  CHECK(code_of([] {
          std::vector<uint32_t> wrong_deg{1, 1};
          build_group(GroupSpec::field(3, 2), &wrong_deg);
        }) == Errc::BadInput);
  CHECK(code_of([] { build_group(GroupSpec::field(13, 1), nullptr, elem_t(3)); }) ==
        Errc::NotPrimitive);  // 3^3 = 1 mod 13
  CHECK(code_of([] { build_group(GroupSpec::field(2, 21)); }) == Errc::OrderTooLarge);
  CHECK(code_of([] { build_group(GroupSpec::cyclic_group(uint64_t(1) << 21)); }) ==
        Errc::OrderTooLarge);
  // the cap is a parameter: raising it admits the same order
  auto big = build_group(GroupSpec::cyclic_group(uint64_t(1) << 21), nullptr, std::nullopt,
                         uint64_t(1) << 22);
  CHECK(big->n == (uint64_t(1) << 21));
}

TEST_CASE("table construction is deterministic") {
  auto a = build_group(GroupSpec::field(3, 5));
  auto b = build_group(GroupSpec::field(3, 5));
  CHECK(a->spec.modulus == b->spec.modulus);
  CHECK(a->theta == b->theta);
  CHECK(a->antilog == b->antilog);
  CHECK(a->logtab == b->logtab);
}

TEST_CASE("element sets") {
  auto g = build_group(GroupSpec::cyclic_group(13));
  ElementSet s(*g);
  CHECK(s.empty());
  s.insert(1);
  s.insert(3);
  s.insert(9);
  s.insert(3);  // duplicate is a no-op
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.elements() == std::vector<elem_t>{1, 3, 9});
  s.erase(3);
  CHECK(s.size() == 2);
  s.insert(3);

  ElementSet c = s.complement();
  CHECK(c.size() == 10);
  CHECK_FALSE(c.contains(1));
  CHECK(c.contains(0));
  CHECK_FALSE(s.intersects(c));

  ElementSet qr = ElementSet::of(*g, {1, 3, 4, 9, 10, 12});
  CHECK(qr.is_symmetric());  // closed under negation mod 13
  CHECK_FALSE(s.is_symmetric());
  CHECK(qr == ElementSet::of(*g, {12, 10, 9, 4, 3, 1}));
  CHECK(qr != s);
}

TEST_CASE("quadratic witnesses") {
  // q = 1 + 4t^2 with t odd: 37 = 1 + 4*9
  auto w = quadratic_witness(37, 1, 4);
  REQUIRE(w);
  CHECK(*w == 3);
  CHECK_FALSE(quadratic_witness(38, 1, 4));
  // q = 9 + 64y^2: 73 = 9 + 64
  w = quadratic_witness(73, 9, 64);
  REQUIRE(w);
  CHECK(*w == 1);
}
