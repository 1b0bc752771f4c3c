#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/linalg.hpp"
#include "lieinv/report.hpp"
#include "lieinv/scalar.hpp"

namespace lieinv {

// Sparse vector over basis indices; no zero entries are stored.
using SparseVector = std::map<std::size_t, Scalar>;

struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar c;  // [e_i, e_j] has component c on e_k
};

// Caller-supplied nilradical / torus decomposition.
struct Split {
  std::vector<std::size_t> nilradical;
  std::vector<std::size_t> torus;

  friend bool operator==(const Split&, const Split&) = default;
};

// Finite-dimensional Lie algebra given by structure constants over Q.
// Only pairs i < j are stored; [e_j, e_i] is recovered by antisymmetry.
// Immutable once constructed.
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  LieAlgebra() = default;

  // Folds i > j by antisymmetry, sums duplicates and drops zero sums.
  // Throws IndexOutOfRange, DuplicateLabel (also when two labels lowercase
  // to the same variable name), NonzeroSelfBracket, DimensionMismatch.
  static LieAlgebra create(std::string name, std::size_t dim, std::vector<std::string> basis,
                           const std::vector<BracketEntry>& brackets,
                           std::optional<Split> split = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  // Dual coordinate names: lowercase basis labels (X0 -> x0).
  const std::vector<std::string>& variable_names() const noexcept { return variables_; }
  const BracketTable& brackets() const noexcept { return brackets_; }
  const std::optional<Split>& split() const noexcept { return split_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  // [e_i, e_j] for any ordered pair.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const;
  // C_ij^k with full antisymmetric extension.
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  // Matrix of ad(x): column j holds [x, e_j].
  Matrix ad(const Vector& x) const;

  LieAlgebra renamed(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_ == b.basis_ && a.brackets_ == b.brackets_ && a.split_ == b.split_ &&
           a.name_ == b.name_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::string> variables_;
  BracketTable brackets_;
  std::optional<Split> split_;
};

// Convenience wrapper matching the raw-triple constructor.
inline LieAlgebra new_algebra(std::size_t dim, std::vector<std::string> basis,
                              const std::vector<BracketEntry>& brackets,
                              std::optional<Split> split = std::nullopt) {
  return LieAlgebra::create("", dim, std::move(basis), brackets, std::move(split));
}

// Bilinear extension of the structure constants. Throws DimensionMismatch.
Vector bracket(const LieAlgebra& g, const Vector& u, const Vector& v);

// Evaluates sum_l C_ij^l C_lk^s + C_jk^l C_li^s + C_ki^l C_lj^s for all
// i<j<k and all s. Violations are listed in data["violations"].
Report validate_jacobi(const LieAlgebra& g);
// Throws JacobiViolation naming the first violated component.
void require_jacobi(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

struct LowerCentralSeries {
  std::vector<Subspace> terms;  // C^0 = g, C^{k+1} = [g, C^k], until stable
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful only when nilpotent
};

LowerCentralSeries lower_central_series(const LieAlgebra& g);

// The subalgebra spanned by the listed basis vectors, labels and constants
// carried over. Throws NotClosed naming the offending pair.
LieAlgebra subalgebra_restrict(const LieAlgebra& g, const std::vector<std::size_t>& indices);

// Restriction to the split's nilradical. Throws SplitMissing.
LieAlgebra nilradical_of(const LieAlgebra& g);

}  // namespace lieinv
