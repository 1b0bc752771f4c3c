#include "lieinv/counting.hpp"

#include <algorithm>
#include <utility>

#include "lieinv/errors.hpp"

namespace lieinv {

CommutatorMatrix::CommutatorMatrix(std::vector<std::vector<Polynomial>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw Error(ErrorCode::NotSquare, "commutator matrix must be square");
  }
}

Matrix CommutatorMatrix::evaluate(std::span<const Scalar> point) const {
  const std::size_t n = size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!entries_[i][j].is_zero()) m(i, j) = entries_[i][j].evaluate(point);
    }
  }
  return m;
}

CommutatorMatrix commutator_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<Polynomial>> entries(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (const auto& [key, vec] : g.brackets()) {
    const auto [i, j] = key;
    Polynomial p(n);
    for (const auto& [k, c] : vec) p += Polynomial::variable(n, k) * c;
    entries[j][i] = -p;
    entries[i][j] = std::move(p);
  }
  return CommutatorMatrix(std::move(entries));
}

namespace {

// Fraction-free echelon elimination in place; returns (rank, last pivot).
// Columns without a pivot are skipped; every division is exact.
std::size_t bareiss_eliminate(std::vector<std::vector<Polynomial>>& m, std::size_t universe, bool& sign_flip,
                              Polynomial& last_pivot) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Polynomial prev = Polynomial::constant(universe, 1);
  std::size_t r = 0;
  sign_flip = false;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign_flip = !sign_flip;
    }
    const Polynomial& pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Polynomial& lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial v = pivot * m[i][j];
        if (!lead.is_zero() && !m[r][j].is_zero()) v -= lead * m[r][j];
        m[i][j] = v.is_zero() ? std::move(v) : divide_exact(v, prev);
      }
      m[i][c] = Polynomial(universe);
    }
    prev = pivot;
    ++r;
  }
  last_pivot = prev;
  return r;
}

std::size_t universe_of_matrix(const std::vector<std::vector<Polynomial>>& m) {
  for (const auto& row : m) {
    for (const auto& p : row) return p.universe();
  }
  return 0;
}

}  // namespace

std::size_t symbolic_rank(std::vector<std::vector<Polynomial>> m) {
  bool flip = false;
  Polynomial last;
  return bareiss_eliminate(m, universe_of_matrix(m), flip, last);
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  }
  const std::size_t universe = universe_of_matrix(m);
  if (n == 0) return Polynomial::constant(universe, 1);
  bool flip = false;
  Polynomial last(universe);
  const std::size_t r = bareiss_eliminate(m, universe, flip, last);
  if (r < n) return Polynomial(universe);
  return flip ? -last : last;
}

std::size_t probabilistic_rank(const CommutatorMatrix& a, unsigned trials, std::uint64_t seed) {
  const std::size_t n = a.size();
  if (n == 0) return 0;
  const std::size_t universe = universe_of_matrix(a.entries());
  PointSampler sampler(seed);
  std::size_t best = 0;
  for (unsigned t = 0; t < std::max(1U, trials); ++t) {
    const Vector point = sampler.point(universe);
    const std::size_t r = rank(a.evaluate(point));
    if (r % 2 != 0) throw Error(ErrorCode::Internal, "odd rank " + std::to_string(r) + " for a skew-symmetric matrix");
    best = std::max(best, r);
  }
  return best;
}

std::size_t generic_rank(const CommutatorMatrix& a, const RankMethod& method) {
  auto kind = method.kind;
  if (kind == RankMethod::Kind::Auto) {
    kind = a.size() > kSymbolicRankMaxDim ? RankMethod::Kind::Probabilistic : RankMethod::Kind::Symbolic;
  }
  if (kind == RankMethod::Kind::Symbolic) return symbolic_rank(a.entries());
  return probabilistic_rank(a, method.trials, method.seed);
}

std::size_t invariant_count(const LieAlgebra& g, const RankMethod& method) {
  return g.dim() - generic_rank(commutator_matrix(g), method);
}

Polynomial principal_minor_determinant(const CommutatorMatrix& a, std::span<const std::size_t> rows,
                                       std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) {
    throw Error(ErrorCode::NotSquare, std::to_string(rows.size()) + " rows vs " + std::to_string(cols.size()) + " columns");
  }
  std::vector<std::vector<Polynomial>> sub;
  for (auto r : rows) {
    if (r >= a.size()) throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(r));
    std::vector<Polynomial> row;
    for (auto c : cols) {
      if (c >= a.size()) throw Error(ErrorCode::IndexOutOfRange, "column index " + std::to_string(c));
      row.push_back(a(r, c));
    }
    sub.push_back(std::move(row));
  }
  if (sub.empty()) return Polynomial::constant(universe_of_matrix(a.entries()), 1);
  return bareiss_determinant(std::move(sub));
}

std::optional<Vector> scaled_gradient(const Function& f, std::span<const Scalar> point) {
  const std::size_t n = point.size();
  Vector row(n);
  if (const auto* r = std::get_if<RationalExpr>(&f)) {
    const Polynomial& p = r->numerator();
    const Polynomial& q = r->denominator();
    const Scalar qv = q.evaluate(point);
    if (sgn(qv) == 0) return std::nullopt;
    const Scalar pv = p.evaluate(point);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar dp = p.involves(i) ? p.differentiate(i).evaluate(point) : Scalar(0);
      Scalar dq = q.involves(i) ? q.differentiate(i).evaluate(point) : Scalar(0);
      row[i] = qv * dp - pv * dq;
    }
    return row;
  }
  const auto& factors = std::get<PowerProduct>(f).factors();
  Vector values;
  for (const auto& fac : factors) {
    values.push_back(fac.base.evaluate(point));
    if (sgn(values.back()) == 0) return std::nullopt;
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    Scalar others = factors[k].exponent;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != k) others *= values[j];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (factors[k].base.involves(i)) row[i] += others * factors[k].base.differentiate(i).evaluate(point);
    }
  }
  return row;
}

std::size_t functional_independence(std::size_t universe, std::span<const Function> fns,
                                    const IndependenceOptions& options) {
  if (fns.empty()) return 0;
  for (const auto& f : fns) {
    if (universe_of(f) != universe) throw Error(ErrorCode::UniverseMismatch, "function universe differs from algebra");
  }
  PointSampler sampler(options.seed);
  std::size_t best = 0;
  unsigned admissible = 0;
  unsigned attempts = 0;
  while (admissible < std::max(1U, options.trials) && attempts < options.max_resamples) {
    ++attempts;
    const Vector point = sampler.point(universe);
    std::vector<Vector> rows;
    bool ok = true;
    for (const auto& f : fns) {
      auto g = scaled_gradient(f, point);
      if (!g) {
        ok = false;
        break;
      }
      rows.push_back(std::move(*g));
    }
    if (!ok) continue;
    ++admissible;
    best = std::max(best, rank(Matrix::from_rows(rows, universe)));
    if (best == fns.size()) break;
  }
  if (admissible == 0) {
    throw Error(ErrorCode::UndefinedAtAllSamples,
                "no sample point avoids the singular locus after " + std::to_string(attempts) + " attempts");
  }
  return best;
}

}  // namespace lieinv
