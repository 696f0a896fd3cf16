#pragma once

// Right modules over an Algebra, given by action matrices.
//
// Elements are column vectors and the action of a basis element b is the
// matrix A_b with m.b = A_b m. The right-module law reads
// A_{b_i b_j} = A_{b_j} A_{b_i}.
//
// A module is "adapted" when every basis vector lies in exactly one weight
// space M e_k; all modules built by this library are adapted, and modules read
// from files are brought to adapted form by `adapt_basis`.

#include <cstddef>
#include <utility>
#include <vector>

#include "ncmot/algebra.hpp"
#include "ncmot/matrix.hpp"

namespace ncmot {

class Module {
 public:
  Module() = default;
  Module(AlgebraPtr over, std::size_t dim, std::vector<SparseMatrix> action);

  static Module zero(AlgebraPtr over);

  const AlgebraPtr& algebra() const { return over_; }
  std::size_t dim() const { return dim_; }
  const SparseMatrix& action(std::size_t b) const { return action_[b]; }
  const std::vector<SparseMatrix>& actions() const { return action_; }

  /// Action matrix of an arbitrary algebra element.
  SparseMatrix action_of(const Vector& element) const;

  bool is_adapted() const { return !weights_.empty() || dim_ == 0; }
  /// Weight (idempotent index) of basis vector j; requires an adapted basis.
  std::size_t weight(std::size_t j) const { return weights_[j]; }
  const std::vector<std::size_t>& weights() const { return weights_; }
  /// Basis indices of weight k; requires an adapted basis.
  std::vector<std::size_t> weight_indices(std::size_t k) const;

  /// dim M e_k for every idempotent, from the ranks of the idempotent actions.
  std::vector<std::size_t> dimension_vector() const;

  /// Checks unit and right-module laws on all basis pairs.
  bool satisfies_axioms() const;

 private:
  AlgebraPtr over_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> action_;
  std::vector<std::size_t> weights_;
};

/// Q^dim as a module over the ground field.
Module vector_space(std::size_t dim);

/// f: src -> dst (dst.dim() x src.dim()) commutes with every basis action.
bool is_homomorphism(const Module& src, const Module& dst, const Matrix& f);

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& over);

/// Restriction of an adapted module to a set of basis vectors spanning a submodule.
Module restrict_to(const Module& m, const std::vector<std::size_t>& indices);

/// e_k A with basis the basis elements b of A whose left idempotent is k.
Module projective_module(const AlgebraPtr& a, std::size_t k);
std::vector<std::size_t> projective_basis(const Algebra& a, std::size_t k);

/// One-dimensional simple module at idempotent k (basic algebras).
Module simple_module(const AlgebraPtr& a, std::size_t k);
std::vector<Module> simple_modules(const AlgebraPtr& a);

/// Linear dual D(A e_k) = e_k DA: the injective hull of the k-th simple.
Module injective_module(const AlgebraPtr& a, std::size_t k);

/// A as a module over enveloping(a): x.(p (x) q) = p x q. A prebuilt
/// enveloping algebra may be supplied.
Module diagonal_bimodule(const AlgebraPtr& a, AlgebraPtr env = nullptr);

/// Left and right actions on a module over bimodule_algebra(A, B):
/// a.x = x.(a (x) 1) and x.b = x.(1 (x) b).
SparseMatrix bimodule_left_action(const Module& x, std::size_t a_basis);
SparseMatrix bimodule_right_action(const Module& x, std::size_t b_basis);

/// Change of basis to adapted form. Returns the adapted module and the
/// invertible matrix T with new coordinates = T * old coordinates.
std::pair<Module, Matrix> adapt_basis(const Module& m);

}  // namespace ncmot
