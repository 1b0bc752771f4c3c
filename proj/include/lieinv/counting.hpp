#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/linalg.hpp"
#include "lieinv/polynomial.hpp"
#include "lieinv/sampling.hpp"

namespace lieinv {

// n x n skew-symmetric matrix with entries A(i,j) = sum_k C_ij^k x_k.
class CommutatorMatrix {
 public:
  CommutatorMatrix() = default;
  explicit CommutatorMatrix(std::vector<std::vector<Polynomial>> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Polynomial>>& entries() const noexcept { return entries_; }
  Matrix evaluate(std::span<const Scalar> point) const;

 private:
  std::vector<std::vector<Polynomial>> entries_;
};

CommutatorMatrix commutator_matrix(const LieAlgebra& g);

struct RankMethod {
  enum class Kind { Auto, Probabilistic, Symbolic };

  Kind kind = Kind::Auto;
  unsigned trials = 5;
  std::uint64_t seed = kDefaultSeed;

  static RankMethod symbolic() { return {Kind::Symbolic}; }
  static RankMethod probabilistic(unsigned trials = 5, std::uint64_t seed = kDefaultSeed) {
    return {Kind::Probabilistic, trials, seed};
  }
};

// Auto resolves to symbolic up to this dimension, probabilistic above it.
inline constexpr std::size_t kSymbolicRankMaxDim = 18;

// Rank over the fraction field via fraction-free (Bareiss) elimination.
std::size_t symbolic_rank(std::vector<std::vector<Polynomial>> m);
// Bareiss determinant. Throws NotSquare.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m);

// Maximum exact rank over seeded random integer points. Throws
// Error(Internal) if a trial yields an odd rank (impossible for skew input).
std::size_t probabilistic_rank(const CommutatorMatrix& a, unsigned trials, std::uint64_t seed);

std::size_t generic_rank(const CommutatorMatrix& a, const RankMethod& method = {});
std::size_t invariant_count(const LieAlgebra& g, const RankMethod& method = {});

// Determinant of the submatrix on the given row and column index lists.
Polynomial principal_minor_determinant(const CommutatorMatrix& a, std::span<const std::size_t> rows,
                                       std::span<const std::size_t> cols);

struct IndependenceOptions {
  unsigned trials = 5;
  std::uint64_t seed = kDefaultSeed;
  unsigned max_resamples = 64;
};

// Gradient row of f at a point, scaled by a nonzero factor so that only
// polynomial arithmetic is needed: Q grad P - P grad Q for P/Q and
// sum_i e_i grad(f_i) prod_{j != i} f_j for power products. Returns
// std::nullopt where a denominator or base vanishes.
std::optional<Vector> scaled_gradient(const Function& f, std::span<const Scalar> point);

// Rank of the Jacobian of fns at random points, maximized over trials.
// Throws UndefinedAtAllSamples when no admissible point is found.
std::size_t functional_independence(std::size_t universe, std::span<const Function> fns,
                                    const IndependenceOptions& options = {});
inline std::size_t functional_independence(const LieAlgebra& g, std::span<const Function> fns,
                                           const IndependenceOptions& options = {}) {
  return functional_independence(g.dim(), fns, options);
}

}  // namespace lieinv
