#include "ncmot/motives.hpp"

#include <sstream>

#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

namespace {

Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (!same_algebra(a, b)) throw AlgebraMismatch(what);
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << to_string(m(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

const AlgebraPtr& Workspace::ring(const AlgebraPtr& a, const AlgebraPtr& b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = rings_.find(key);
  if (it != rings_.end()) return it->second;
  keep_alive_.push_back(a);
  keep_alive_.push_back(b);
  return rings_.emplace(key, bimodule_algebra(a, b)).first->second;
}

const HochschildContext& Workspace::hochschild(const AlgebraPtr& a) {
  auto it = contexts_.find(a.get());
  if (it != contexts_.end()) return *it->second;
  keep_alive_.push_back(a);
  auto ctx = std::make_unique<HochschildContext>(a, cap_, ring(a, a));
  return *contexts_.emplace(a.get(), std::move(ctx)).first->second;
}

Correspondence Workspace::identity(const AlgebraPtr& a) {
  return {a, a, {{Rational(1), hochschild(a).diagonal_resolution()}}};
}

Correspondence Workspace::projector(const AlgebraPtr& a, std::size_t i) {
  const std::size_t m = a->idempotent_count();
  if (i >= m) throw std::out_of_range("projector index out of range");
  return {a, a, {{Rational(1), PerfectComplex::projective(ring(a, a), i * m + i)}}};
}

Correspondence Workspace::complement(const AlgebraPtr& a, std::size_t i) {
  return add(identity(a), scale(projector(a, i), Rational(-1)));
}

NCMotive Workspace::motive(const std::string& name, const AlgebraPtr& a) { return {name, a, identity(a), true}; }

NCMotive Workspace::motive(const std::string& name, const AlgebraPtr& a, Correspondence e) {
  require_same(e.source, a, "motive idempotent has the wrong source");
  require_same(e.target, a, "motive idempotent has the wrong target");
  return {name, a, std::move(e), false};
}

Correspondence Workspace::compose(const Correspondence& y, const Correspondence& x) {
  require_same(x.target, y.source, "composing correspondences whose endpoints do not chain");
  Correspondence out{x.source, y.target, {}};
  const AlgebraPtr& r = ring(x.source, y.target);
  for (const auto& tx : x.terms)
    for (const auto& ty : y.terms) {
      const Rational c = tx.coeff * ty.coeff;
      if (sgn(c) == 0) continue;
      out.terms.push_back({c, resolve_complex(tensor_over(tx.complex, ty.complex.to_complex(), r), cap_)});
    }
  return out;
}

Correspondence Workspace::dualize(const Correspondence& x) {
  Correspondence out{x.target, x.source, {}};
  const AlgebraPtr& r = ring(x.target, x.source);
  for (const auto& t : x.terms) out.terms.push_back({t.coeff, dual(t.complex, r)});
  return out;
}

Correspondence Workspace::serre(const Correspondence& x) {
  Correspondence out{x.source, x.target, {}};
  for (const auto& t : x.terms) out.terms.push_back({t.coeff, ncmot::serre(t.complex, cap_)});
  return out;
}

Rational Workspace::trace(const Correspondence& z) {
  require_same(z.source, z.target, "trace of a correspondence that is not an endomorphism");
  const HochschildContext& ctx = hochschild(z.source);
  Rational sum = 0;
  for (const auto& t : z.terms) sum += t.coeff * to_rational(ctx.homology(t.complex.to_complex()).euler_characteristic());
  return sum;
}

Rational Workspace::chi_hom(const Correspondence& x, const Correspondence& y) {
  require_same(x.source, y.source, "chi of correspondences with different sources");
  require_same(x.target, y.target, "chi of correspondences with different targets");
  Rational sum = 0;
  for (const auto& tx : x.terms)
    for (const auto& ty : y.terms) sum += tx.coeff * ty.coeff * to_rational(euler_pairing(tx.complex, ty.complex));
  return sum;
}

Rational Workspace::intersection_number(const Correspondence& x, const Correspondence& y) {
  require_same(x.target, y.source, "intersection of correspondences whose endpoints do not chain");
  require_same(y.target, x.source, "intersection of correspondences that do not return to the source");
  const HochschildContext& ctx = hochschild(x.source);
  const AlgebraPtr& r = ring(x.source, x.source);
  Rational sum = 0;
  for (const auto& tx : x.terms)
    for (const auto& ty : y.terms) {
      const Rational c = tx.coeff * ty.coeff;
      if (sgn(c) == 0) continue;
      const Complex w = tensor_over(tx.complex, ty.complex.to_complex(), r);
      sum += c * to_rational(ctx.homology(w).euler_characteristic());
    }
  return sum;
}

Vector Workspace::k0(const Correspondence& x) {
  const AlgebraPtr& r = ring(x.source, x.target);
  Vector out(r->idempotent_count());
  for (const auto& t : x.terms) {
    const auto cls = k0_class(t.complex);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coeff * to_rational(cls.coords[i]);
  }
  return out;
}

Correspondence Workspace::project(const NCMotive& src, const NCMotive& dst, const Correspondence& x) {
  Correspondence out = x;
  if (!src.is_identity) out = compose(out, src.idempotent);
  if (!dst.is_identity) out = compose(dst.idempotent, out);
  return out;
}

bool Workspace::is_idempotent(const NCMotive& m) {
  return k0(compose(m.idempotent, m.idempotent)) == k0(m.idempotent);
}

Correspondence scale(const Correspondence& x, const Rational& c) {
  Correspondence out = x;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

Correspondence add(const Correspondence& x, const Correspondence& y) {
  require_same(x.source, y.source, "adding correspondences with different sources");
  require_same(x.target, y.target, "adding correspondences with different targets");
  Correspondence out = x;
  out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
  return out;
}

Correspondence combine(const std::vector<Correspondence>& basis, const Vector& v) {
  if (basis.empty() || basis.size() != v.size()) throw std::invalid_argument("combination needs one coefficient per basis element");
  Correspondence out{basis[0].source, basis[0].target, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(v[i]) != 0) out = add(out, scale(basis[i], v[i]));
  return out;
}

namespace {

// Projected simple classes, reduced to a K0-independent family.
std::vector<Correspondence> projected_basis(Workspace& ws, const NCMotive& src, const NCMotive& dst,
                                            std::vector<Vector>& classes, std::vector<std::string>& labels) {
  const AlgebraPtr& r = ws.ring(src.algebra, dst.algebra);
  SubspaceBuilder span(r->idempotent_count());
  std::vector<Correspondence> out;
  for (std::size_t s = 0; s < r->idempotent_count(); ++s) {
    Correspondence g{src.algebra, dst.algebra, {{Rational(1), projective_resolution(simple_module(r, s), ws.cap())}}};
    Correspondence p = ws.project(src, dst, g);
    Vector cls = ws.k0(p);
    if (is_zero(cls) || !span.add(cls)) continue;
    classes.push_back(std::move(cls));
    labels.push_back("S(" + r->label(r->idempotent(s)) + ")");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

HomSpaceModel Workspace::build_hom_model(const NCMotive& src, const NCMotive& dst) {
  HomSpaceModel m;
  m.source = src;
  m.target = dst;
  std::vector<std::string> labels, reverse_labels;
  std::vector<Vector> reverse_classes;
  m.basis = projected_basis(*this, src, dst, m.classes, labels);
  m.reverse_basis = projected_basis(*this, dst, src, reverse_classes, reverse_labels);
  const std::size_t n = m.basis.size();
  m.gram_chi = {Matrix(n, n), labels};
  m.gram_int = {Matrix(n, n), labels};
  std::vector<Correspondence> duals;
  for (const auto& b : m.basis) duals.push_back(dualize(b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.gram_chi.values(i, j) = chi_hom(m.basis[i], m.basis[j]);
      m.gram_int.values(i, j) = intersection_number(duals[i], m.basis[j]);
    }
  m.pairing = Matrix(n, m.reverse_basis.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m.reverse_basis.size(); ++k)
      m.pairing(i, k) = intersection_number(m.basis[i], m.reverse_basis[k]);
  return m;
}

std::vector<Vector> numerical_kernel(const HomSpaceModel& m) {
  if (m.basis.empty()) return {};
  if (m.reverse_basis.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      Vector v(m.basis.size());
      v[i] = 1;
      all.push_back(std::move(v));
    }
    return all;
  }
  return left_kernel_basis(m.pairing);
}

EquivalenceReport verify_equivalence(Workspace& ws, const HomSpaceModel& m) {
  EquivalenceReport rep;
  const std::string model = m.source.name + " -> " + m.target.name;
  const std::size_t n = m.basis.size();
  auto record = [&](std::string name, std::string anchor, std::string expected, std::string actual, bool pass) {
    rep.checks.push_back({std::move(name), std::move(anchor), model, std::move(expected), std::move(actual), pass});
  };

  record("idempotent_law_source", "e o e = e on K0 classes", "true", ws.is_idempotent(m.source) ? "true" : "false",
         ws.is_idempotent(m.source));
  record("idempotent_law_target", "e o e = e on K0 classes", "true", ws.is_idempotent(m.target) ? "true" : "false",
         ws.is_idempotent(m.target));

  rep.ker_left = kernel_left(m.gram_chi);
  rep.ker_right = kernel_right(m.gram_chi);
  rep.numerical = numerical_kernel(m);
  const bool lr = same_span(rep.ker_left, rep.ker_right, n);
  record("euler_kernels_agree", "left and right kernels of the Euler form coincide",
         "dim " + std::to_string(rep.ker_left.size()), "dim " + std::to_string(rep.ker_right.size()) + (lr ? " (same span)" : " (different span)"), lr);

  bool square = m.gram_chi.values == m.gram_int.values;
  record("commutative_square", "chi(X, Y) = <D(X) . Y>", matrix_text(m.gram_chi.values), matrix_text(m.gram_int.values), square);

  std::size_t trace_ok = 0, serre_ok = 0, sym_ok = 0;
  std::string trace_fail, serre_fail, sym_fail;
  std::vector<Correspondence> duals, serres;
  for (const auto& b : m.basis) {
    duals.push_back(ws.dualize(b));
    serres.push_back(ws.serre(b));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational chi = m.gram_chi.values(i, j);
      const Rational tr = ws.trace(ws.compose(duals[i], m.basis[j]));
      if (tr == chi) {
        ++trace_ok;
      } else if (trace_fail.empty()) {
        trace_fail = "(" + std::to_string(i) + "," + std::to_string(j) + "): chi " + to_string(chi) + " trace " + to_string(tr);
      }
      const Rational s = ws.chi_hom(m.basis[j], serres[i]);
      if (s == chi) {
        ++serre_ok;
      } else if (serre_fail.empty()) {
        serre_fail = "(" + std::to_string(i) + "," + std::to_string(j) + "): chi " + to_string(chi) + " serre " + to_string(s);
      }
    }
  const std::string pairs = std::to_string(n * n) + " pairs";
  record("trace_formula", "chi(X, Y) = trace of Y (x)_B D(X)", pairs + " equal",
         std::to_string(trace_ok) + " equal" + (trace_fail.empty() ? "" : "; first mismatch " + trace_fail), trace_ok == n * n);
  record("serre_identity", "chi(M, N) = chi(N, S(M))", pairs + " equal",
         std::to_string(serre_ok) + " equal" + (serre_fail.empty() ? "" : "; first mismatch " + serre_fail), serre_ok == n * n);

  const std::size_t nr = m.reverse_basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < nr; ++k) {
      const Rational other = ws.intersection_number(m.reverse_basis[k], m.basis[i]);
      if (other == m.pairing(i, k)) {
        ++sym_ok;
      } else if (sym_fail.empty()) {
        sym_fail = "(" + std::to_string(i) + "," + std::to_string(k) + ")";
      }
    }
  record("intersection_symmetry", "<X . Y> = <Y . X>", std::to_string(n * nr) + " pairs equal",
         std::to_string(sym_ok) + " equal" + (sym_fail.empty() ? "" : "; first mismatch " + sym_fail), sym_ok == n * nr);

  const bool eq_left = same_span(rep.numerical, rep.ker_left, n);
  const bool eq_right = same_span(rep.numerical, rep.ker_right, n);
  const auto dual_side = kernel_right(m.gram_int);
  const bool eq_dual = same_span(rep.numerical, dual_side, n);
  record("kernel_equals_numerical", "Ker(chi) = numerically trivial correspondences",
         "dim " + std::to_string(rep.ker_right.size()), "dim " + std::to_string(rep.numerical.size()), eq_left && eq_right);
  record("numerical_kernel_from_dual_pairing", "numerical kernel = right kernel of <D(b_i) . b_j>",
         "dim " + std::to_string(rep.numerical.size()), "dim " + std::to_string(dual_side.size()), eq_dual);

  const Rational det = n == 0 ? Rational(1) : determinant(m.gram_chi.values);
  rep.nondegenerate = sgn(det) != 0;
  if (n == 0) {
    rep.statement = "Hom-space is zero; both kernels are the zero space of a zero-dimensional model";
  } else if (rep.nondegenerate) {
    rep.statement = "gram_chi nondegenerate (det " + to_string(det) +
                    "): Ker(chi) and the numerical kernel are both empty, and equal";
  } else {
    rep.statement = "gram_chi degenerate: Ker(chi) has dimension " + std::to_string(rep.ker_right.size()) +
                    ", numerical kernel has dimension " + std::to_string(rep.numerical.size()) +
                    (eq_left && eq_right ? ", and they span the same subspace" : ", and they differ");
  }
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace ncmot
