#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/coadjoint.hpp"
#include "lieinv/polynomial.hpp"
#include "lieinv/report.hpp"

namespace lieinv {

// Monomials of total degree min_degree..max_degree, ordered by degree and
// then by descending grlex within a degree.
struct AnsatzSpace {
  std::size_t universe = 0;
  unsigned min_degree = 0;
  unsigned max_degree = 0;
  std::vector<Exponents> monomials;

  static AnsatzSpace make(std::size_t universe, unsigned min_degree, unsigned max_degree);
  std::size_t dim() const noexcept { return monomials.size(); }
  Polynomial combine(const Vector& coefficients) const;
};

// chi is the ad-weight: [V_t, e_b] = w e_b gives x_b weight w, and the
// coadjoint torus operators act as V^_t P = -chi_t P.
struct SemiInvariant {
  Polynomial poly;
  Vector weight;

  friend bool operator==(const SemiInvariant&, const SemiInvariant&) = default;
};

// RREF-canonical basis of the invariants of degree 1..d.
std::vector<Polynomial> polynomial_invariants(const LieAlgebra& g, unsigned d);
// Same over an explicit operator set (e.g. sign-flipped operators).
std::vector<Polynomial> polynomial_invariants(std::span<const VectorField> ops, std::size_t universe, unsigned d);

// Semi-invariants of degree 1..d, solved per weight class in order of first
// appearance in the ansatz. Throws SplitMissing (and verify_torus errors).
std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, unsigned d);

// prod P_i^{e_i} for each basis vector e of the kernel of the weight matrix,
// scaled to coprime integers.
std::vector<PowerProduct> power_product_combine(std::span<const SemiInvariant> semis);

// Invariants N * Q_D / P_D where D = P_D / Q_D (integer exponents) and N
// ranges over degree 0..d, with the constant solution removed. Throws
// DenominatorNotSemiInvariant, BadParameters (non-integer exponents).
std::vector<RationalExpr> rational_search_fixed_denominator(const LieAlgebra& g, const PowerProduct& denominator,
                                                            unsigned d);

struct SearchBudget {
  unsigned max_degree = 4;
  unsigned max_denominator_power = 2;
  std::vector<PowerProduct> extra_denominators;
};

struct FundamentalSetResult {
  std::vector<Function> functions;
  std::size_t target = 0;
  bool reached = false;
  Report report;
};

// Best effort: degree by degree runs polynomial invariants, semi-invariants
// with power-product combination, then rational search over denominators
// built from semi-invariants whose weight is parallel to that of a center
// element of the nilradical. Candidates are re-verified and kept when they
// raise the functional-independence rank; stops at invariant_count(g).
FundamentalSetResult fundamental_set_search(const LieAlgebra& g, const SearchBudget& budget = {});

}  // namespace lieinv
