#include "ncmot/linalg.hpp"

#include <stdexcept>

#include "ncmot/kernels/elimination.hpp"

namespace ncmot {

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return kernels::row_reduce(m, false).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return {};
  if (m.rows() == 0) {
    std::vector<Vector> basis;
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto ech = kernels::row_reduce(m, true);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const Rational& entry = ech.reduced(i, f);
      if (sgn(entry) != 0) v[ech.pivots[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, n) = b[i];
  const auto ech = kernels::row_reduce(std::move(aug), true);
  Vector x(n);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == n) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, n);
  }
  return x;
}

std::vector<Vector> image_basis(const Matrix& m) {
  if (m.empty()) return {};
  const auto ech = kernels::row_reduce(m, false);
  std::vector<Vector> out;
  for (auto p : ech.pivots) out.push_back(m.column(p));
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = kernels::row_reduce(hstack(m, Matrix::identity(n)), true);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw std::invalid_argument("inverse of singular matrix");
  return ech.reduced.block(0, n, n, n);
}

bool span_contains(const std::vector<Vector>& basis, const std::vector<Vector>& vectors, std::size_t length) {
  SubspaceBuilder span(length);
  for (const auto& v : basis) span.add(v);
  for (const auto& v : vectors)
    if (!span.contains(v)) return false;
  return true;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length) {
  return span_contains(a, b, length) && span_contains(b, a, length);
}

void SubspaceBuilder::reduce(Vector& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    const Vector& b = basis_[k];
    for (std::size_t j = p; j < length_; ++j)
      if (sgn(b[j]) != 0) v[j] -= f * b[j];
  }
}

bool SubspaceBuilder::add(Vector v) {
  if (v.size() != length_) throw std::invalid_argument("subspace vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < length_ && sgn(v[p]) == 0) ++p;
  if (p == length_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < length_; ++j)
    if (sgn(v[j]) != 0) v[j] *= inv;
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SubspaceBuilder::contains(Vector v) const {
  if (v.size() != length_) throw std::invalid_argument("subspace vector length mismatch");
  reduce(v);
  return is_zero(v);
}

}  // namespace ncmot
