#include "lieinv/linalg.hpp"

#include <utility>

#include "lieinv/errors.hpp"

namespace lieinv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix power(const Matrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "power of non-square matrix");
  Matrix out = Matrix::identity(m.rows());
  for (unsigned i = 0; i < exponent; ++i) out = out * m;
  return out;
}

bool SparseEliminator::add_row(Row row) {
  // Reduce against existing pivots in increasing column order; reduction by a
  // pivot only touches columns greater than the pivot's non-pivot entries, so
  // a single forward sweep suffices.
  for (auto it = row.begin(); it != row.end();) {
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const Scalar f = it->second;
    const std::size_t col = it->first;
    for (const auto& [c, v] : piv->second) {
      Scalar& dst = row[c];
      dst -= f * v;
    }
    // Drop cancelled entries; restart just after the eliminated column.
    for (auto jt = row.begin(); jt != row.end();) {
      if (sgn(jt->second) == 0) {
        jt = row.erase(jt);
      } else {
        ++jt;
      }
    }
    it = row.upper_bound(col);
  }
  if (row.empty()) return false;
  const std::size_t pc = row.begin()->first;
  const Scalar inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  // Keep existing rows fully reduced with respect to the new pivot.
  for (auto& [other_col, other] : pivots_) {
    auto hit = other.find(pc);
    if (hit == other.end()) continue;
    const Scalar f = hit->second;
    for (const auto& [c, v] : row) {
      Scalar& dst = other[c];
      dst -= f * v;
      if (sgn(dst) == 0) other.erase(c);
    }
  }
  pivots_.emplace(pc, std::move(row));
  return true;
}

std::vector<Vector> SparseEliminator::nullspace() const {
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivots_.count(f) != 0) continue;
    Vector v(cols_);
    v[f] = 1;
    for (const auto& [pc, row] : pivots_) {
      auto hit = row.find(f);
      if (hit != row.end()) v[pc] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(vectors, ambient);
  const auto pivots = rref_in_place(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return span(ambient, rows);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector not in ambient space");
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

}  // namespace lieinv
