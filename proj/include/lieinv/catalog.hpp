#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/linalg.hpp"
#include "lieinv/polynomial.hpp"

namespace lieinv {

enum class Family { D2m, D2m1, D5Prime, D5ab, Example9, Example8, Heisenberg, Abelian };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Abelian;
  unsigned m = 0;  // d2m (>= 3), d2m1 (>= 2)
  Scalar a = 0;    // d5ab, (a, b) != (0, 0)
  Scalar b = 0;
  unsigned k = 0;  // heisenberg (>= 1)
  unsigned n = 0;  // abelian (>= 1)
  bool errata = true;  // d2m1 only

  static FamilySpec d2m(unsigned m) { return {Family::D2m, m}; }
  static FamilySpec d2m1(unsigned m, bool errata = true) {
    FamilySpec s{Family::D2m1, m};
    s.errata = errata;
    return s;
  }
  static FamilySpec d5prime() { return {Family::D5Prime}; }
  static FamilySpec d5ab(Scalar a, Scalar b) { return {Family::D5ab, 0, std::move(a), std::move(b)}; }
  static FamilySpec example9() { return {Family::Example9}; }
  static FamilySpec example8() { return {Family::Example8}; }
  static FamilySpec heisenberg(unsigned k) {
    FamilySpec s{Family::Heisenberg};
    s.k = k;
    return s;
  }
  static FamilySpec abelian(unsigned n) {
    FamilySpec s{Family::Abelian};
    s.n = n;
    return s;
  }
};

// Canonical algebra name, e.g. "d2m(m=3)" or "d5ab(a=1,b=-2)".
std::string spec_name(const FamilySpec& spec);

// Basis orders:
//   d2m       X0..X3, Y1..Y(2m-4), V1..Vm
//   d2m1      X0..X3, Y1..Y(2m-3), V1..Vm
//   d5prime   X0..X3, Y1, V1, V2
//   d5ab      X0..X3, Y1, V
//   example9  Y1..Y7, V1, V2
//   example8  Y1..Y7, V2
//   heisenberg Y1..Y(2k), Z
//   abelian   X1..Xn
// Throws BadParameters; JacobiViolation for an inconsistent law (the
// verbatim d2m1 law, errata = false, is built without this check).
LieAlgebra build(const FamilySpec& spec);

// Fundamental sets as printed, in the coordinates of build(spec).
std::vector<Function> claimed_invariants(const FamilySpec& spec);

// Torus change of basis V1 -> V1 - 2 V2 - sum_{i>=1} (i+4) V(i+2), others
// fixed, for a torus of dimension p >= 2: the basis in which the d2m1
// commutator table and the d5ab table are written.
Matrix table_torus_basis(std::size_t p);

// First item-2 invariant of d2m1 exactly as printed, read in the
// coordinates of build(d2m1(m)).
RationalExpr d2m1_printed_invariant(const LieAlgebra& g, unsigned m);

}  // namespace lieinv
