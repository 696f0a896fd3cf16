#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncmot/matrix.hpp"

namespace ncmot {

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. Free variables are taken in ascending column
/// order; the vector for free column f has a 1 at f and zeros at the other
/// free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of {v : v^T m = 0}, i.e. the kernel of the transpose.
std::vector<Vector> left_kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Throws std::invalid_argument when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Linearly independent subset of the columns of m spanning its image,
/// chosen greedily left to right.
std::vector<Vector> image_basis(const Matrix& m);

Rational determinant(const Matrix& m);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

/// True when every vector of `vectors` lies in the span of `basis`.
bool span_contains(const std::vector<Vector>& basis, const std::vector<Vector>& vectors,
                   std::size_t length);

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length);

/// Incrementally maintained echelon basis of a subspace of Q^n.
class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Adds v to the span. Returns true when v was independent.
  bool add(Vector v);
  bool contains(Vector v) const;

 private:
  void reduce(Vector& v) const;

  std::size_t length_;
  std::vector<Vector> basis_;           // each normalized to 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace ncmot
