#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

// Dense row-major matrix over exact rationals. Sizes here are at most a few
// dozen, so no attempt is made at blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Gauss-Jordan to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(const Matrix& m);
Matrix power(const Matrix& m, unsigned exponent);

// Incremental sparse Gauss-Jordan. Rows are kept fully reduced, so the
// pivot structure is the RREF of everything added so far.
class SparseEliminator {
 public:
  using Row = std::map<std::size_t, Scalar>;

  explicit SparseEliminator(std::size_t cols) : cols_(cols) {}

  // Returns true if the row increased the rank.
  bool add_row(Row row);
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::vector<Vector> nullspace() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, Row> pivots_;  // pivot column -> normalized row
};

// A linear subspace of Q^n held as a canonical RREF basis, so equal subspaces
// compare equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

}  // namespace lieinv
