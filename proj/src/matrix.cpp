#include "ncmot/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncmot/kernels/elimination.hpp"

namespace ncmot {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  if (r + block.rows() > rows_ || c + block.cols() > cols_) throw std::out_of_range("block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw std::out_of_range("block out of range");
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r + i, c + j);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector size mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Rational(1)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j)
    for (std::size_t i = 0; i < d.rows(); ++i)
      if (sgn(d(i, j)) != 0) m.columns_[j].push_back({i, d(i, j)});
  return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse entry out of range");
  if (sgn(value) == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    it->value += value;
    if (sgn(it->value) == 0) col.erase(it);
  } else {
    col.insert(it, Entry{r, value});
  }
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) d(e.row, j) = e.value;
  return d;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

bool SparseMatrix::is_zero_one_diagonal() const {
  if (rows_ != cols_) return false;
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& col = columns_[j];
    if (col.empty()) continue;
    if (col.size() != 1 || col[0].row != j || col[0].value != 1) return false;
  }
  return true;
}

Rational SparseMatrix::diagonal(std::size_t i) const {
  for (const auto& e : columns_[i])
    if (e.row == i) return e.value;
  return 0;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("sparse apply size mismatch");
  Vector y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (const auto& e : columns_[j]) y[e.row] += e.value * x[j];
  }
  return y;
}

Matrix SparseMatrix::apply(const Matrix& x) const {
  if (x.rows() != cols_) throw std::invalid_argument("sparse apply size mismatch");
  Matrix y(rows_, x.cols());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& e : columns_[j]) {
      for (std::size_t k = 0; k < x.cols(); ++k) {
        if (sgn(x(j, k)) != 0) y(e.row, k) += e.value * x(j, k);
      }
    }
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({j, e.value});
  return t;
}

SparseMatrix SparseMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<std::size_t> row_map(rows_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < rows.size(); ++i) row_map[rows[i]] = i;
  SparseMatrix out(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& e : columns_[cols[j]]) {
      const std::size_t r = row_map[e.row];
      if (r != static_cast<std::size_t>(-1)) out.columns_[j].push_back({r, e.value});
    }
    std::sort(out.columns_[j].begin(), out.columns_[j].end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
  }
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("sparse size mismatch");
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : other.columns_[j]) add(e.row, j, e.value);
  return *this;
}

SparseMatrix& SparseMatrix::scale(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& c : columns_) c.clear();
    return *this;
  }
  for (auto& c : columns_)
    for (auto& e : c) e.value *= s;
  return *this;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
  }
  return true;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product size mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Vector acc(a.rows());
    std::vector<bool> touched(a.rows(), false);
    for (const auto& eb : b.column(j)) {
      for (const auto& ea : a.column(eb.row)) {
        acc[ea.row] += ea.value * eb.value;
        touched[ea.row] = true;
      }
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (touched[i] && sgn(acc[i]) != 0) out.add(i, j, acc[i]);
  }
  return out;
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb)
      for (const auto& ea : a.column(ja))
        for (const auto& eb : b.column(jb)) out.add(ea.row * b.rows() + eb.row, ja * b.cols() + jb, ea.value * eb.value);
  return out;
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) out.add(e.row, j, e.value);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (const auto& e : b.column(j)) out.add(a.rows() + e.row, a.cols() + j, e.value);
  return out;
}

}  // namespace ncmot
