// Cyclotomic class decomposition, number tables, the semiprimitive closed
// form, and the identity audit.
#include "sedf/cyclotomy.hpp"

#include <algorithm>

namespace sedf {

CyclotomicSystem build_cyclotomy(GroupPtr field, uint32_t e) {
  if (!field) throw Error(Errc::BadInput, "null group");
  if (!field->is_field()) throw Error(Errc::NotAField, "cyclotomic classes need a field");
  if (e < 2) throw Error(Errc::BadInput, "class count must be >= 2");
  uint64_t qm1 = field->n - 1;
  if (qm1 % e) throw Error(Errc::OrderDoesNotDivide, std::to_string(e) + " does not divide q-1");

  CyclotomicSystem sys;
  sys.field = field;
  sys.e = e;
  sys.f = qm1 / e;
  sys.class_of.assign(field->n, -1);
  sys.classes.reserve(e);
  for (uint32_t i = 0; i < e; ++i) sys.classes.emplace_back(*field);
  for (uint64_t l = 0; l < qm1; ++l) {
    uint32_t cls = uint32_t(l % e);
    elem_t x = field->antilog[l];
    sys.class_of[x] = int32_t(cls);
    sys.classes[cls].insert(x);
  }
  return sys;
}

uint64_t cyclotomic_number(const CyclotomicSystem& sys, int64_t i, int64_t j) {
  const GroupTable& g = *sys.field;
  uint32_t e = sys.e;
  uint32_t ii = uint32_t(((i % e) + e) % e), jj = uint32_t(((j % e) + e) % e);
  uint64_t count = 0;
  for (elem_t x : sys.classes[ii].elements()) {
    elem_t y = g.add(1, x);
    if (y != 0 && sys.class_of[y] == int32_t(jj)) ++count;
  }
  return count;
}

CycNumberTable brute_force_numbers(const CyclotomicSystem& sys) {
  const GroupTable& g = *sys.field;
  CycNumberTable tab;
  tab.e = sys.e;
  tab.numbers.assign(uint64_t(sys.e) * sys.e, 0);
  for (uint64_t x = 1; x < g.n; ++x) {
    elem_t y = g.add(1, elem_t(x));
    if (y == 0) continue;
    tab.numbers[uint64_t(sys.class_of[x]) * sys.e + uint64_t(sys.class_of[y])]++;
  }
  return tab;
}

bool is_semiprimitive(uint32_t p, uint32_t e) {
  if (e < 2) return false;
  uint64_t cur = p % e;
  // Powers of p mod e cycle within at most e values.
  for (uint32_t t = 1; t <= 2 * e; ++t) {
    if (cur == uint64_t(e - 1) % e) return true;
    if (cur == 1) return false;  // cycle closed without hitting -1
    cur = cur * p % e;
  }
  return false;
}

CycNumberTable semiprimitive_numbers(uint32_t p, uint32_t m, uint32_t e) {
  if (e < 2) throw Error(Errc::BadInput, "class count must be >= 2");
  if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic must be prime");
  if (m % 2) throw Error(Errc::OddDegree, "closed form needs an even extension degree");
  uint32_t l = m / 2;
  uint64_t root = 1;  // p^l mod e
  for (uint32_t i = 0; i < l; ++i) root = root * p % e;
  if (root * root % e != 1) throw Error(Errc::OrderDoesNotDivide, "e must divide q-1");
  if (!is_semiprimitive(p, e))
    throw Error(Errc::NotSemiprimitive, "no power of p is -1 mod e");

  // s = eps * p^l with s = 1 (mod e); try +1 first.
  __int128 pl = 1;
  for (uint32_t i = 0; i < l; ++i) pl *= p;
  int64_t s = 0;
  if (root == 1)
    s = int64_t(pl);
  else if ((e - root) % e == 1)
    s = -int64_t(pl);
  else
    throw Error(Errc::NotSemiprimitive, "neither sign of sqrt(q) is 1 mod e");
  int64_t eta = (s - 1) / int64_t(e);

  auto entry = [&](int64_t v) {
    if (v < 0) throw Error(Errc::ConditionNotMet, "closed form yields a negative count");
    return uint64_t(v);
  };
  CycNumberTable tab;
  tab.e = e;
  tab.numbers.assign(uint64_t(e) * e, 0);
  for (uint32_t i = 0; i < e; ++i)
    for (uint32_t j = 0; j < e; ++j) {
      int64_t v;
      if (i == 0 && j == 0)
        v = eta * eta - (int64_t(e) - 3) * eta - 1;
      else if (i == 0 || j == 0 || i == j)
        v = eta * eta + eta;
      else
        v = eta * eta;
      tab.numbers[uint64_t(i) * e + j] = entry(v);
    }
  return tab;
}

IdentityAuditReport audit_identities(const CyclotomicSystem& sys) {
  const GroupTable& g = *sys.field;
  const uint32_t e = sys.e;
  const CycNumberTable tab = brute_force_numbers(sys);
  IdentityAuditReport rep;
  rep.items[0].name = "coset-shift";
  rep.items[1].name = "negation-class";
  rep.items[2].name = "transpose";
  rep.items[3].name = "row-sum";
  rep.items[4].name = "delta-expansion";

  auto fail = [&](int idx, const std::string& cex) {
    if (rep.items[idx].pass) {
      rep.items[idx].pass = false;
      rep.items[idx].counterexample = cex;
    }
  };

  const int64_t ee = e;
  for (int64_t i = 0; i < ee; ++i)
    for (int64_t j = 0; j < ee; ++j) {
      uint64_t base = tab.at(i, j);
      if (base != tab.at(-i, j - i))
        fail(0, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") vs (-i,j-i)");
      if (base != tab.at(int64_t(g.p) * i, int64_t(g.p) * j))
        fail(0, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") vs (pi,pj)");
    }

  int32_t neg_one_class = sys.class_of[g.neg(1)];
  int32_t expected = (g.p >= 3 && sys.f % 2 == 1) ? int32_t(e / 2) : 0;
  if (neg_one_class != expected)
    fail(1, "-1 lies in C_" + std::to_string(neg_one_class) + ", expected C_" +
                std::to_string(expected));

  for (int64_t i = 0; i < ee; ++i)
    for (int64_t j = 0; j < ee; ++j) {
      uint64_t want = neg_one_class == 0 ? tab.at(j, i) : tab.at(j + ee / 2, i + ee / 2);
      if (tab.at(i, j) != want)
        fail(2, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  for (uint32_t i = 0; i < e; ++i) {
    uint64_t sum = 0;
    for (uint32_t j = 0; j < e; ++j) sum += tab.at(i, j);
    uint64_t want = sys.f - (neg_one_class == int32_t(i) ? 1 : 0);
    if (sum != want)
      fail(3, "row " + std::to_string(i) + " sums to " + std::to_string(sum) + ", expected " +
                  std::to_string(want));
  }

  for (int64_t i = 0; i < ee && rep.items[4].pass; ++i)
    for (int64_t j = 0; j < ee && rep.items[4].pass; ++j) {
      DiffMultiset direct = delta(sys.classes[i], sys.classes[j]);
      DiffMultiset expanded = delta_classes(sys, i, j);
      if (!(direct == expanded))
        fail(4, "Delta(C_" + std::to_string(i) + ",C_" + std::to_string(j) + ")");
    }

  return rep;
}

DiffMultiset delta_classes(const CyclotomicSystem& sys, int64_t i, int64_t j) {
  const GroupTable& g = *sys.field;
  const CycNumberTable tab = brute_force_numbers(sys);
  DiffMultiset out(g);
  const int64_t e = sys.e;
  int64_t ii = ((i % e) + e) % e, jj = ((j % e) + e) % e;
  if (ii == jj) out.counts[0] = sys.f;
  for (int64_t l = 0; l < e; ++l) {
    uint64_t coeff = tab.at(jj - l, ii - l);
    if (!coeff) continue;
    for (elem_t x : sys.classes[l].elements()) out.counts[x] += coeff;
  }
  return out;
}

}  // namespace sedf
