#pragma once

// Correspondences between algebras, their composition and the two pairings
// on Hom-spaces of motives (A, e).
//
// A correspondence A -> B is a rational combination of perfect complexes
// over A^op (x) B. compose(y, x) is x (x)_B y, so y o x reads "x then y".
// Equality of correspondences is always tested on K0 classes.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ncmot/derived.hpp"
#include "ncmot/hochschild.hpp"

namespace ncmot {

struct Correspondence {
  struct Term {
    Rational coeff;
    PerfectComplex complex;
  };

  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Term> terms;
};

struct NCMotive {
  std::string name;
  AlgebraPtr algebra;
  Correspondence idempotent;
  bool is_identity = false;  // idempotent is the diagonal bimodule
};

/// Check record shared by model verification and the CLI reports.
struct CheckRecord {
  std::string name;
  std::string anchor;  // the identity this check instantiates
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct HomSpaceModel {
  NCMotive source;
  NCMotive target;
  std::vector<Correspondence> basis;          // spans Hom(source, target)
  std::vector<Vector> classes;                // K0 classes of basis
  std::vector<Correspondence> reverse_basis;  // spans Hom(target, source)
  PairingMatrix gram_chi;                     // chi(b_i, b_j)
  PairingMatrix gram_int;                     // <D(b_i) . b_j>
  Matrix pairing;                             // <b_i . w_k> against reverse_basis
};

struct EquivalenceReport {
  std::vector<CheckRecord> checks;
  std::vector<Vector> ker_left;
  std::vector<Vector> ker_right;
  std::vector<Vector> numerical;
  bool nondegenerate = false;
  std::string statement;  // human-readable kernel verdict
  bool pass = false;
};

/// Caches bimodule rings, diagonal resolutions and Hochschild contexts so
/// that repeated pairings over the same algebras share work. Not thread-safe;
/// use one workspace per thread.
class Workspace {
 public:
  explicit Workspace(int cap = kDefaultResolutionCap) : cap_(cap) {}

  int cap() const { return cap_; }

  /// A^op (x) B, built once per pair.
  const AlgebraPtr& ring(const AlgebraPtr& a, const AlgebraPtr& b);
  const HochschildContext& hochschild(const AlgebraPtr& a);

  Correspondence identity(const AlgebraPtr& a);
  /// [A e_i (x) e_i A].
  Correspondence projector(const AlgebraPtr& a, std::size_t i);
  Correspondence complement(const AlgebraPtr& a, std::size_t i);
  NCMotive motive(const std::string& name, const AlgebraPtr& a);
  NCMotive motive(const std::string& name, const AlgebraPtr& a, Correspondence e);

  Correspondence compose(const Correspondence& y, const Correspondence& x);
  Correspondence dualize(const Correspondence& x);
  Correspondence serre(const Correspondence& x);

  Rational trace(const Correspondence& z);
  Rational chi_hom(const Correspondence& x, const Correspondence& y);
  Rational intersection_number(const Correspondence& x, const Correspondence& y);

  /// K0 class with rational coordinates in the simple bimodules.
  Vector k0(const Correspondence& x);

  /// e o x o e' as a correspondence src.algebra -> dst.algebra.
  Correspondence project(const NCMotive& src, const NCMotive& dst, const Correspondence& x);
  /// K0-level idempotent law e o e = e.
  bool is_idempotent(const NCMotive& m);

  HomSpaceModel build_hom_model(const NCMotive& src, const NCMotive& dst);

 private:
  int cap_;
  std::map<std::pair<const Algebra*, const Algebra*>, AlgebraPtr> rings_;
  std::map<const Algebra*, std::unique_ptr<HochschildContext>> contexts_;
  std::map<const Algebra*, PerfectComplex> diagonals_;
  std::vector<AlgebraPtr> keep_alive_;
};

Correspondence scale(const Correspondence& x, const Rational& c);
Correspondence add(const Correspondence& x, const Correspondence& y);
/// Correspondence sum_i v_i basis_i.
Correspondence combine(const std::vector<Correspondence>& basis, const Vector& v);

/// Left null space of the pairing against the reversed Hom-space.
std::vector<Vector> numerical_kernel(const HomSpaceModel& m);

/// Kernel comparison plus the identities relating the two pairings.
EquivalenceReport verify_equivalence(Workspace& ws, const HomSpaceModel& m);

}  // namespace ncmot
