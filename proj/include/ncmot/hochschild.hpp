#pragma once

// Hochschild homology HH_n(A, W) = H^{-n}(P (x)_{A^e} W) where P is a
// projective resolution of the diagonal bimodule, plus bar-complex oracles.

#include <memory>

#include "ncmot/complex.hpp"

namespace ncmot {

/// Dimensions of HH_n, indexed homologically (dims.lo is the lowest n).
struct HHProfile {
  AlgebraPtr algebra;
  GradedDims dims;

  std::size_t operator[](int n) const { return dims[n]; }
  /// Sum of (-1)^n dim HH_n.
  long long euler_characteristic() const { return dims.euler_characteristic(); }
};

/// Holds the diagonal resolution of one algebra for repeated use.
class HochschildContext {
 public:
  /// Resolves the diagonal bimodule; `env` may supply a prebuilt A^op (x) A.
  explicit HochschildContext(AlgebraPtr a, int cap = kDefaultResolutionCap, AlgebraPtr env = nullptr);

  const AlgebraPtr& algebra() const { return a_; }
  const AlgebraPtr& enveloping() const { return env_; }
  const PerfectComplex& diagonal_resolution() const { return diag_; }

  /// HH of a complex of A-bimodules (a complex over enveloping()).
  HHProfile homology(const Complex& w) const;
  /// Sum of (-1)^n dim HH_n(A, w), from the component dimensions.
  long long euler_characteristic(const Complex& w) const;

 private:
  AlgebraPtr a_;
  AlgebraPtr env_;
  PerfectComplex diag_;
};

/// Throws CapExceeded when the diagonal resolution exceeds `cap`.
HHProfile hochschild(const AlgebraPtr& a, const Complex& w, int cap = kDefaultResolutionCap);
HHProfile hochschild(const AlgebraPtr& a, const Module& w, int cap = kDefaultResolutionCap);

/// HH_0..HH_top from the bar complex relative to the span E of the
/// idempotents: chains of composable radical basis elements with
/// coefficients in e_t W e_s and the Hochschild differential.
HHProfile bar_oracle(const AlgebraPtr& a, const Module& w, int top);

/// HH_0..HH_top from the full bar complex W (x) A^{(x) n}; only feasible for
/// very small algebras.
HHProfile bar_oracle_full(const AlgebraPtr& a, const Module& w, int top);

/// The free bimodule A (x) A, i.e. A^e as a right module over itself.
Module free_bimodule(const AlgebraPtr& a);

}  // namespace ncmot
