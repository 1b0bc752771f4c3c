#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/polynomial.hpp"
#include "lieinv/report.hpp"
#include "lieinv/sampling.hpp"

namespace lieinv {

struct CharSequence {
  std::vector<std::size_t> blocks;  // descending, sums to dim
  Vector witness;

  friend bool operator==(const CharSequence&, const CharSequence&) = default;
};

// Jordan block sizes of ad(x). Throws NotNilpotentOperator.
CharSequence jordan_sequence(const LieAlgebra& g, const Vector& x);

struct CharSequenceOptions {
  unsigned samples = 50;
  std::uint64_t seed = kDefaultSeed;
};

// Lexicographic max of jordan_sequence over basis vectors outside C^1(g) and
// seeded random vectors outside C^1(g). A lower bound in general; basis
// candidates are scanned first and ties keep the earliest witness.
// Throws NotNilpotent.
CharSequence characteristic_sequence(const LieAlgebra& g, const CharSequenceOptions& options = {});

// Eigenvalues of ad(V_t) on each basis vector: weights[b][t] with
// [V_t, e_b] = weights[b][t] e_b (zero for torus vectors).
struct WeightTable {
  std::vector<std::size_t> torus;
  std::vector<std::size_t> nilradical;
  std::vector<Vector> weights;

  const Vector& weight(std::size_t basis_index) const { return weights.at(basis_index); }
};

// Throws SplitMissing, TorusNotAbelian, NotDiagonalOnBasis.
WeightTable verify_torus(const LieAlgebra& g);

struct RootSystem {
  std::vector<std::size_t> variables;  // basis indices kept (all but the regular one)
  std::vector<std::vector<long>> rows;  // one row e_i + e_j - e_k per nonzero C_ij^k
  std::size_t rank = 0;
  std::size_t nilradical_dim = 0;

  bool rank_condition() const { return rank + 1 == nilradical_dim; }
};

struct RootSystemOptions {
  unsigned regularity_samples = 25;
  std::uint64_t seed = kDefaultSeed;
};

// `regular` holds coefficients over the torus generators. The basis vector
// of the first generator with a nonzero coefficient is the one replaced by
// the regular vector. Throws SplitMissing, DimensionMismatch, ZeroAlpha,
// NotRegular (and verify_torus errors).
RootSystem root_system(const LieAlgebra& g, const Vector& regular, const RootSystemOptions& options = {});

// n + <V> with V = sum alpha_t V_t, nilradical labels first, then "V".
// Throws SplitMissing, DimensionMismatch, ZeroAlpha.
LieAlgebra subtorus_restriction(const LieAlgebra& g, const Vector& alpha);

// Replaces the torus generators by V'_s = sum_t t(s, t) V_t, labels kept.
// Throws SplitMissing, DimensionMismatch, BadParameters (singular t).
LieAlgebra change_torus_basis(const LieAlgebra& g, const Matrix& t);

// Verdict "torus_independence": no function involves a torus coordinate.
Report torus_independence_check(const LieAlgebra& g, std::span<const Function> fns);

// Itemized check of the subtorus restriction statement. Throws
// HypothesisFailed when V acts trivially on the center of the nilradical.
Report prop1_check(const LieAlgebra& g, const Vector& alpha, std::span<const Function> fns);

}  // namespace lieinv
