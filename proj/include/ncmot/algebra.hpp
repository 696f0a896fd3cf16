#pragma once

// Finite-dimensional basic algebras over Q given by structure constants in a
// basis adapted to a complete set of primitive orthogonal idempotents.
//
// Adapted means: every basis element b satisfies e_s b e_t = b for exactly one
// pair (s, t) of idempotents, the idempotents themselves are basis elements,
// and the remaining basis elements span the Jacobson radical. Path algebras of
// acyclic quivers, their opposites and tensor products all have such a basis.
//
// Path convention: for an arrow a: i -> j we have e_i * a * e_j = a, so
// products of paths read left to right.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncmot/rational.hpp"

namespace ncmot {

struct Quiver {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::string label;
  };
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;

  /// Throws UnsupportedInput on out-of-range endpoints, duplicate labels or
  /// (with `require_acyclic`) an oriented cycle.
  void validate(bool require_acyclic = true) const;
  bool is_acyclic() const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  struct Term {
    std::size_t index;
    Rational coeff;
  };
  using Element = std::vector<Term>;  // sparse expansion in the basis

  struct Spec {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::size_t> idempotents;         // basis indices of e_1..e_n
    std::vector<std::vector<Element>> products;   // products[i][j] = b_i * b_j
    std::vector<std::size_t> radical_generators;        // generate rad as a left ideal; empty = all radical elements
    std::vector<std::size_t> radical_right_generators;  // generate rad as a right ideal; empty = all radical elements
  };

  /// Validates the adapted-basis conditions and associativity. Throws
  /// UnsupportedInput when they fail.
  static AlgebraPtr create(Spec spec);

  /// The ground field Q as a one-dimensional algebra.
  static AlgebraPtr field();

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  std::size_t idempotent_count() const { return idempotents_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Basis index of the k-th primitive idempotent.
  std::size_t idempotent(std::size_t k) const { return idempotents_[k]; }
  /// Idempotent indices s, t with e_s b e_t = b.
  std::size_t left_idempotent(std::size_t b) const { return left_[b]; }
  std::size_t right_idempotent(std::size_t b) const { return right_[b]; }
  bool is_radical(std::size_t b) const { return radical_[b]; }
  /// Basis elements g with rad = sum of A g (resp. sum of g A).
  const std::vector<std::size_t>& radical_generators() const { return radical_generators_; }
  const std::vector<std::size_t>& radical_right_generators() const { return radical_right_generators_; }

  const Element& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;

  Vector unit() const;
  Vector idempotent_vector(std::size_t k) const;
  Vector basis_vector(std::size_t b) const;

  /// dim e_s A e_t.
  std::size_t cartan(std::size_t s, std::size_t t) const { return cartan_[s * idempotent_count() + t]; }

  /// Factors (L, R) when this algebra was built as tensor(L, R) (or as the
  /// opposite of such a tensor). Basis index (i, j) is i * R.dim() + j.
  const std::optional<std::pair<AlgebraPtr, AlgebraPtr>>& factors() const { return factors_; }

  /// Structural equality of bases and structure constants (names ignored).
  bool same_structure(const Algebra& other) const;
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Checks (b_i b_j) b_k = b_i (b_j b_k) on all basis triples.
  bool is_associative() const;

 private:
  Algebra() = default;
  friend AlgebraPtr opposite(const AlgebraPtr& a);
  friend AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
  static AlgebraPtr finish(Spec spec, std::optional<std::pair<AlgebraPtr, AlgebraPtr>> factors, bool validate);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> idempotents_;
  std::vector<Element> products_;
  std::vector<std::size_t> left_, right_;
  std::vector<bool> radical_;
  std::vector<std::size_t> radical_generators_;
  std::vector<std::size_t> radical_right_generators_;
  std::vector<std::size_t> cartan_;
  std::optional<std::pair<AlgebraPtr, AlgebraPtr>> factors_;
  std::uint64_t fingerprint_ = 0;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Path algebra of an acyclic quiver. Basis: trivial paths e_1..e_n, then
/// paths of positive length ordered by length and then by arrow sequence.
AlgebraPtr path_algebra(const Quiver& q, std::string name = "");

/// Same vector space with reversed multiplication; same unit and idempotents.
AlgebraPtr opposite(const AlgebraPtr& a);

/// a (x) b with componentwise product. Idempotent (k, l) has index
/// k * b.idempotent_count() + l.
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

/// tensor(opposite(a), b): the algebra whose right modules are a-b-bimodules.
AlgebraPtr bimodule_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Enveloping algebra tensor(opposite(a), a).
AlgebraPtr enveloping(const AlgebraPtr& a);

/// Number of directed paths (including trivial ones), counted by depth-first
/// search independently of the algebra construction.
std::size_t count_paths(const Quiver& q);

}  // namespace ncmot
