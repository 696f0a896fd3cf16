#pragma once

// Invariants of the derived category of perfect complexes: Grothendieck
// classes, the Euler form, the Serre functor and the bimodule dual.

#include <string>
#include <vector>

#include "ncmot/complex.hpp"

namespace ncmot {

/// Class in K_0 in the basis of simple modules S_1..S_n.
struct K0Class {
  AlgebraPtr over;
  std::vector<long long> coords;

  friend bool operator==(const K0Class& a, const K0Class& b) { return a.coords == b.coords; }
};

K0Class operator+(const K0Class& a, const K0Class& b);
K0Class operator-(const K0Class& a, const K0Class& b);

/// Gram matrix of a bilinear form with labels for its basis.
struct PairingMatrix {
  Matrix values;
  std::vector<std::string> basis;

  std::size_t size() const { return values.rows(); }
};

K0Class k0_class(const PerfectComplex& p);
/// Alternating sum of dimension vectors; agrees with the perfect version on resolutions.
K0Class k0_class(const Complex& c);

/// chi(M, N) = sum_i (-1)^i dim H^i hom_complex(M, N), computed from the
/// component dimensions of the Hom complex.
long long euler_pairing(const PerfectComplex& m, const PerfectComplex& n);

/// Entry (i, j) = chi(res S_i, res S_j).
PairingMatrix euler_matrix(const AlgebraPtr& a, int cap = kDefaultResolutionCap);

/// DR = Hom_Q(R, Q) as a complex of right R-modules in degree 0 with the
/// left R action (c f)(x) = f(x c).
LeftModuleComplex dual_bimodule(const AlgebraPtr& r);

/// S(M) = resolution of M (x)_R DR.
PerfectComplex serre(const PerfectComplex& m, int cap = kDefaultResolutionCap);

/// {v : v^T G = 0} and {v : G v = 0}.
std::vector<Vector> kernel_left(const PairingMatrix& g);
std::vector<Vector> kernel_right(const PairingMatrix& g);

struct SmoothnessCheck {
  bool smooth = false;
  PerfectComplex resolution;  // of the diagonal bimodule over A^op (x) A
  int length = 0;             // hi - lo of the resolution
};

/// Resolves A over A^op (x) A; smooth = false when the cap is exhausted.
SmoothnessCheck check_smooth(const AlgebraPtr& a, int cap = kDefaultResolutionCap);

/// Always true: every algebra here is finite-dimensional.
bool check_proper(const AlgebraPtr& a);

/// Hom_R(X, R) for X perfect over R = A^op (x) B, negated degrees and
/// transposed differentials, read as a complex over B^op (x) A. The target
/// ring is built unless supplied.
PerfectComplex dual(const PerfectComplex& x, AlgebraPtr target = nullptr);

}  // namespace ncmot
