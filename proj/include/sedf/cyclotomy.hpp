// Cyclotomic classes C_i = theta^i * <theta^e> of a finite field, cyclotomic
// numbers (i,j)_e = |(1 + C_i) ∩ C_j|, the semiprimitive closed form, and a
// batch audit of the classical identities these numbers satisfy.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sedf/designs.hpp"
#include "sedf/group.hpp"

namespace sedf {

struct CyclotomicSystem {
  GroupPtr field;
  uint32_t e = 0;   // number of classes, e >= 2, e | q-1
  uint64_t f = 0;   // class size, f = (q-1)/e
  std::vector<int32_t> class_of;   // encoding -> class index; class_of[0] = -1
  std::vector<ElementSet> classes;

  uint64_t q() const { return field->n; }
  int32_t klass(elem_t x) const { return class_of[x]; }
};

// Requires a field group (NotAField), e >= 2 (BadInput), e | q-1
// (OrderDoesNotDivide). Deterministic given the field's tables.
CyclotomicSystem build_cyclotomy(GroupPtr field, uint32_t e);

// (i,j)_e for arbitrary integers i, j (reduced mod e). O(f) per call.
uint64_t cyclotomic_number(const CyclotomicSystem& sys, int64_t i, int64_t j);

struct CycNumberTable {
  uint32_t e = 0;
  std::vector<uint64_t> numbers;  // e*e, row-major: numbers[i*e + j] = (i,j)_e

  uint64_t at(int64_t i, int64_t j) const {
    int64_t ii = ((i % e) + e) % e, jj = ((j % e) + e) % e;
    return numbers[uint64_t(ii) * e + uint64_t(jj)];
  }
};

// Single O(q) pass over the field.
CycNumberTable brute_force_numbers(const CyclotomicSystem& sys);

// True when some power of p is congruent to -1 mod e.
bool is_semiprimitive(uint32_t p, uint32_t e);

// Closed form for the semiprimitive case: with s = eps * p^(m/2) chosen so
// that s = 1 (mod e) (eps = +1 preferred when both signs work) and
// eta = (s-1)/e:
//   (0,0) = eta^2 - (e-3)*eta - 1,
//   (0,i) = (i,0) = (i,i) = eta^2 + eta   (1 <= i <= e-1),
//   (i,j) = eta^2                         (1 <= i != j <= e-1).
// Errors: OddDegree (m odd), OrderDoesNotDivide (e does not divide p^m - 1),
// NotSemiprimitive (no power of p is -1 mod e, or no valid sign exists).
CycNumberTable semiprimitive_numbers(uint32_t p, uint32_t m, uint32_t e);

struct IdentityAuditReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string counterexample;  // first violation, empty when pass
  };
  std::array<Item, 5> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// Audits, against the brute-force table of `sys`:
//   1. coset-shift:     (i,j) = (-i, j-i) and (i,j) = (p*i, p*j)
//   2. negation-class:  -1 in C_{e/2} iff p >= 3 and f odd, else -1 in C_0
//   3. transpose:       (i,j) = (j,i) when -1 in C_0, else (j+e/2, i+e/2)
//   4. row-sum:         sum_j (i,j) = f - [ -1 in C_i ]
//   5. delta-expansion: Delta(C_i, C_j) = d_ij*f*{0} + sum_l (j-l, i-l) C_l
// Identity 4 is stated here in its corrected form; the commonly printed
// variant puts the -1 deduction on the wrong side and fails on real data.
IdentityAuditReport audit_identities(const CyclotomicSystem& sys);

// Difference multiset of two classes via the cyclotomic-number expansion
// (identity 5 above); must agree with the direct pairwise computation.
DiffMultiset delta_classes(const CyclotomicSystem& sys, int64_t i, int64_t j);

}  // namespace sedf
