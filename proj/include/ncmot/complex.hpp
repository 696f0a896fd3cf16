#pragma once

// Bounded cochain complexes (the differential raises degree by one).
//
// Shift convention: (C[k])^n = C^{n-k} with differential (-1)^k d, so that
// H^i hom_complex(M, N) = Hom(M, N[-i]).

#include <cstddef>
#include <map>
#include <vector>

#include "ncmot/algebra.hpp"
#include "ncmot/matrix.hpp"
#include "ncmot/module.hpp"

namespace ncmot {

/// Dimensions indexed by degree; zero outside [lo, lo + dims.size()).
struct GradedDims {
  int lo = 0;
  std::vector<std::size_t> dims;

  std::size_t operator[](int n) const;
  long long euler_characteristic() const;
  /// Lowest and highest degree carrying a nonzero entry (lo > hi when all zero).
  int first_nonzero() const;
  int last_nonzero() const;
  bool all_zero() const;

  /// Equality as functions of the degree (padding zeros ignored).
  friend bool operator==(const GradedDims& a, const GradedDims& b);
};

class Complex {
 public:
  Complex() = default;
  /// terms[i] sits in degree lo + i; differentials[i]: terms[i] -> terms[i + 1].
  Complex(AlgebraPtr over, int lo, std::vector<Module> terms, std::vector<Matrix> differentials);

  static Complex concentrated(const Module& m, int degree = 0);
  static Complex zero(AlgebraPtr over);

  const AlgebraPtr& algebra() const { return over_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }

  /// Component in degree n (the zero module outside [lo, hi]).
  const Module& term(int n) const;
  std::size_t dim(int n) const { return term(n).dim(); }
  /// d^n: C^n -> C^{n+1} as a dim(n+1) x dim(n) matrix.
  Matrix differential(int n) const;

  GradedDims dims() const;

  /// d^{n+1} d^n = 0 in every degree.
  bool is_complex() const;
  /// is_complex, module axioms for each term, and each d^n a homomorphism.
  bool verify() const;

  /// Same complex with zero terms at both ends removed.
  Complex trimmed() const;
  /// Every term brought to an adapted basis.
  Complex adapted() const;

 private:
  AlgebraPtr over_;
  int lo_ = 0;
  std::vector<Module> terms_;
  std::vector<Matrix> differentials_;
  Module zero_;
};

/// Chain map given by its degree components; missing degrees are zero.
using ChainMap = std::map<int, Matrix>;

struct HomologyGroup {
  std::size_t dim = 0;
  std::vector<Vector> representatives;  // cocycles whose classes form a basis
};

HomologyGroup homology(const Complex& c, int n);
std::size_t homology_dim(const Complex& c, int n);
GradedDims homology_dims(const Complex& c);

/// Sum of (-1)^n dim C^n.
long long euler_characteristic(const Complex& c);

Complex shift(const Complex& c, int k);
Complex direct_sum(const Complex& a, const Complex& b);
/// cone^n = Y^n + X^{n+1} with d(y, x) = (d y + f x, -d x).
Complex cone(const Complex& x, const Complex& y, const ChainMap& f);
bool is_chain_map(const Complex& x, const Complex& y, const ChainMap& f);

// Perfect complexes ---------------------------------------------------------

/// Matrix of ring elements; entry (l, k) maps summand k of the source to
/// summand l of the target by left multiplication.
struct RingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Algebra::Element> entries;  // row-major

  RingMatrix() = default;
  RingMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Algebra::Element& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Algebra::Element& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
};

namespace ring {
Algebra::Element add(const Algebra::Element& a, const Algebra::Element& b);
Algebra::Element scale(const Algebra::Element& a, const Rational& s);
Algebra::Element multiply(const Algebra& r, const Algebra::Element& a, const Algebra::Element& b);
Algebra::Element from_vector(const Vector& v);
RingMatrix multiply(const Algebra& r, const RingMatrix& a, const RingMatrix& b);
}  // namespace ring

/// Bounded complex of finitely generated projectives e_s R, stored as the
/// list of summand idempotents per degree and ring-element differentials.
class PerfectComplex {
 public:
  PerfectComplex() = default;
  /// summands[i] lists the idempotent indices of degree lo + i; differentials[i]
  /// goes from degree lo + i to lo + i + 1. Entries are checked to lie in
  /// e_{target} R e_{source}.
  PerfectComplex(AlgebraPtr ring, int lo, std::vector<std::vector<std::size_t>> summands,
                 std::vector<RingMatrix> differentials);

  static PerfectComplex zero(AlgebraPtr ring);
  /// e_k R concentrated in one degree.
  static PerfectComplex projective(AlgebraPtr ring, std::size_t k, int degree = 0);

  const AlgebraPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(summands_.size()) - 1; }
  bool empty() const { return summands_.empty(); }

  const std::vector<std::size_t>& summands(int n) const;
  /// Number of copies of each e_k R in degree n.
  std::vector<std::size_t> multiplicities(int n) const;
  RingMatrix differential(int n) const;
  /// Total number of indecomposable summands.
  std::size_t rank() const;

  bool is_complex() const;
  PerfectComplex trimmed() const;
  /// The same data over a structurally equal ring object.
  PerfectComplex rebased(AlgebraPtr ring) const;

  /// The underlying complex of right R-modules.
  Complex to_complex() const;

 private:
  AlgebraPtr ring_;
  int lo_ = 0;
  std::vector<std::vector<std::size_t>> summands_;
  std::vector<RingMatrix> differentials_;
};

/// Explicit matrix of a ring-element map between sums of projectives.
Matrix explicit_map(const Algebra& r, const std::vector<std::size_t>& source,
                    const std::vector<std::size_t>& target, const RingMatrix& m);
/// Direct sum of the e_s R in order, each with basis projective_basis(r, s).
Module projective_sum(const AlgebraPtr& r, const std::vector<std::size_t>& summands);

PerfectComplex shift(const PerfectComplex& p, int k);
PerfectComplex direct_sum(const PerfectComplex& a, const PerfectComplex& b);
/// Chain map between perfect complexes given by ring matrices per degree.
using PerfectMap = std::map<int, RingMatrix>;
PerfectComplex cone(const PerfectComplex& x, const PerfectComplex& y, const PerfectMap& f);
bool is_chain_map(const PerfectComplex& x, const PerfectComplex& y, const PerfectMap& f);

// Resolutions ---------------------------------------------------------------

inline constexpr int kDefaultResolutionCap = 16;

struct Resolution {
  PerfectComplex complex;
  ChainMap comparison;  // quasi-isomorphism complex.to_complex() -> input (adapted)
  Complex target;       // the adapted input the comparison map lands in
};

/// Minimal perfect complex quasi-isomorphic to c. Throws CapExceeded when
/// more than `cap` degrees below c.lo() are needed.
Resolution resolve_with_map(const Complex& c, int cap = kDefaultResolutionCap);
PerfectComplex resolve_complex(const Complex& c, int cap = kDefaultResolutionCap);
PerfectComplex projective_resolution(const Module& m, int cap = kDefaultResolutionCap);

// Hom and tensor ------------------------------------------------------------

/// Total Hom complex over Q: degree i is the product over p of
/// Hom(P^p, N^{p+i}), with D f = d_N f - (-1)^i f d_P.
Complex hom_complex(const PerfectComplex& m, const Complex& n);

/// Complex of right S-modules with a commuting left action of R. The left
/// action of r on degree n is left_action[n - lo][r] (composition follows the
/// product of R: L_{r r'} = L_r L_{r'}); it must be diagonal on R's idempotents.
struct LeftModuleComplex {
  AlgebraPtr left;
  Complex complex;
  std::vector<std::vector<SparseMatrix>> left_action;

  const std::vector<SparseMatrix>& action(int n) const { return left_action[n - complex.lo()]; }
  bool verify() const;
};

/// P (x)_R W as a complex of right S-modules. With `perfect_first` the
/// Koszul sign sits on d_W as (-1)^p, otherwise on d_P as (-1)^q.
Complex tensor_perfect(const PerfectComplex& p, const LeftModuleComplex& w, bool perfect_first = true);

/// X (x)_B Y for X perfect over A^op (x) B and Y over B^op (x) C, as a
/// complex over A^op (x) C. The target ring is built unless supplied.
Complex tensor_over(const PerfectComplex& x, const Complex& y, AlgebraPtr target = nullptr);
/// X (x)_B Y for X over A^op (x) B and Y perfect over B^op (x) C.
Complex tensor_over(const Complex& x, const PerfectComplex& y, AlgebraPtr target = nullptr);

}  // namespace ncmot
