#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ncmot/rational.hpp"

namespace ncmot {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  bool is_zero() const;
  Matrix transpose() const;

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);
  Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Sparse matrix stored by columns; used for module action matrices, which
/// for monomial algebras have at most a handful of entries per column.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Adds `value` at (r, c). Entries must be inserted with increasing row per
  /// column or via `add`, which merges.
  void add(std::size_t r, std::size_t c, const Rational& value);
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  Matrix to_dense() const;
  bool is_zero() const;
  /// True when the matrix is diagonal with entries in {0, 1}.
  bool is_zero_one_diagonal() const;
  Rational diagonal(std::size_t i) const;

  Vector apply(const Vector& x) const;
  Matrix apply(const Matrix& x) const;

  SparseMatrix transpose() const;
  /// Restriction to the given row and column index sets.
  SparseMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& scale(const Rational& s);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace ncmot
