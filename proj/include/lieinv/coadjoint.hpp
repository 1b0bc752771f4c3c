#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/polynomial.hpp"
#include "lieinv/report.hpp"

namespace lieinv {

struct DerivationTerm {
  Polynomial coefficient;  // degree <= 1
  std::size_t target;      // differentiate with respect to this variable
};

// First-order operator sum_t coefficient_t * d/dx_{target_t}; one term per
// target, no zero coefficients.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::size_t universe, std::vector<DerivationTerm> terms);

  std::size_t universe() const noexcept { return universe_; }
  const std::vector<DerivationTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial apply(const Polynomial& p) const;
  VectorField negated() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t universe_ = 0;
  std::vector<DerivationTerm> terms_;
};

// X^_i = -C_ij^k x_k d/dx_j. Throws IndexOutOfRange.
VectorField coadjoint_operator(const LieAlgebra& g, std::size_t i);
std::vector<VectorField> coadjoint_operators(const LieAlgebra& g);

// (Q v(P) - P v(Q)) / Q^2, never reduced.
RationalExpr apply_vf(const VectorField& v, const RationalExpr& f);

// sum_i e_i v(f_i) prod_{j != i} f_j: zero iff v annihilates the power
// product (logarithmic derivative cleared of denominators).
Polynomial power_product_defect(const VectorField& v, const PowerProduct& f);

// The operator-list overloads let callers reuse a precomputed (or sign
// flipped) operator set; labels name the operators in the report.
Report is_invariant_rational(std::span<const VectorField> ops, std::span<const std::string> labels,
                             std::span<const std::string> names, const RationalExpr& f);
Report is_invariant_power_product(std::span<const VectorField> ops, std::span<const std::string> labels,
                                  std::span<const std::string> names, const PowerProduct& f);

Report is_invariant_rational(const LieAlgebra& g, const RationalExpr& f);
Report is_invariant_power_product(const LieAlgebra& g, const PowerProduct& f);
Report is_invariant(const LieAlgebra& g, const Function& f);

}  // namespace lieinv
