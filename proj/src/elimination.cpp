#include "ncmot/kernels/elimination.hpp"

#include <atomic>
#include <stdexcept>

#include <omp.h>

namespace ncmot::kernels {

namespace {

std::atomic<std::size_t> g_threshold{4096};

// Nonzero column indices of row r from column `from` on.
std::vector<std::size_t> support(const Matrix& m, std::size_t r, std::size_t from) {
  std::vector<std::size_t> cols;
  for (std::size_t j = from; j < m.cols(); ++j)
    if (sgn(m(r, j)) != 0) cols.push_back(j);
  return cols;
}

// row[i] -= factor * row[p] restricted to the pivot row's support.
void eliminate_row(Matrix& m, std::size_t i, std::size_t p, std::size_t c, const std::vector<std::size_t>& cols,
                   Rational& scratch) {
  const Rational factor = m(i, c) / m(p, c);
  for (std::size_t j : cols) {
    scratch = factor * m(p, j);
    m(i, j) -= scratch;
  }
}

template <bool Parallel>
Echelon row_reduce_impl(Matrix m, bool reduce) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(r, j));
    }
    if (reduce) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    const auto cols_support = support(m, r, c);
    const std::size_t begin = reduce ? 0 : r + 1;
    if constexpr (Parallel) {
      const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel
      {
        Rational scratch;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(begin); i < n; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          if (ui == r || sgn(m(ui, c)) == 0) continue;
          eliminate_row(m, ui, r, c, cols_support, scratch);
        }
      }
    } else {
      Rational scratch;
      for (std::size_t i = begin; i < rows; ++i) {
        if (i == r || sgn(m(i, c)) == 0) continue;
        eliminate_row(m, i, r, c, cols_support, scratch);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <bool Parallel>
Matrix multiply_impl(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  Matrix c(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  auto row_kernel = [&](std::size_t i, Rational& scratch) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        scratch = aik * b(k, j);
        c(i, j) += scratch;
      }
    }
  };
  if constexpr (Parallel) {
#pragma omp parallel
    {
      Rational scratch;
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) row_kernel(static_cast<std::size_t>(i), scratch);
    }
  } else {
    Rational scratch;
    for (std::size_t i = 0; i < a.rows(); ++i) row_kernel(i, scratch);
  }
  return c;
}

bool use_parallel(const Matrix& m) {
  return m.rows() * m.cols() >= g_threshold.load(std::memory_order_relaxed) && !omp_in_parallel();
}

}  // namespace

namespace serial {
Echelon row_reduce(Matrix m, bool reduce) { return row_reduce_impl<false>(std::move(m), reduce); }
Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl<false>(a, b); }
}  // namespace serial

namespace parallel {
Echelon row_reduce(Matrix m, bool reduce) { return row_reduce_impl<true>(std::move(m), reduce); }
Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl<true>(a, b); }
}  // namespace parallel

Echelon row_reduce(Matrix m, bool reduce) {
  if (use_parallel(m)) return parallel::row_reduce(std::move(m), reduce);
  return serial::row_reduce(std::move(m), reduce);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.rows() * b.cols() >= g_threshold.load(std::memory_order_relaxed) && !omp_in_parallel())
    return parallel::multiply(a, b);
  return serial::multiply(a, b);
}

std::size_t parallel_threshold() { return g_threshold.load(); }
void set_parallel_threshold(std::size_t entries) { g_threshold.store(entries); }

}  // namespace ncmot::kernels
