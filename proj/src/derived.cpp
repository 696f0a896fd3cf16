#include "ncmot/derived.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

K0Class operator+(const K0Class& a, const K0Class& b) {
  if (a.coords.size() != b.coords.size()) throw AlgebraMismatch("adding K0 classes of different algebras");
  K0Class out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

K0Class operator-(const K0Class& a, const K0Class& b) {
  if (a.coords.size() != b.coords.size()) throw AlgebraMismatch("subtracting K0 classes of different algebras");
  K0Class out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

K0Class k0_class(const PerfectComplex& p) {
  const Algebra& r = *p.ring();
  K0Class out{p.ring(), std::vector<long long>(r.idempotent_count(), 0)};
  if (p.empty()) return out;
  for (int n = p.lo(); n <= p.hi(); ++n) {
    const long long sign = n % 2 == 0 ? 1 : -1;
    for (auto s : p.summands(n))
      for (std::size_t i = 0; i < r.idempotent_count(); ++i) out.coords[i] += sign * static_cast<long long>(r.cartan(s, i));
  }
  return out;
}

K0Class k0_class(const Complex& c) {
  K0Class out{c.algebra(), std::vector<long long>(c.algebra()->idempotent_count(), 0)};
  if (c.empty()) return out;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const long long sign = n % 2 == 0 ? 1 : -1;
    const auto dv = c.term(n).dimension_vector();
    for (std::size_t i = 0; i < dv.size(); ++i) out.coords[i] += sign * static_cast<long long>(dv[i]);
  }
  return out;
}

long long euler_pairing(const PerfectComplex& m, const PerfectComplex& n) {
  if (!same_algebra(m.ring(), n.ring())) throw AlgebraMismatch("Euler pairing of complexes over different algebras");
  if (m.empty() || n.empty()) return 0;
  const Algebra& r = *m.ring();
  // Degree q - p of the Hom complex contains Hom(e_s R, e_t R) = e_t R e_s.
  long long sum = 0;
  for (int p = m.lo(); p <= m.hi(); ++p)
    for (int q = n.lo(); q <= n.hi(); ++q) {
      const long long sign = (q - p) % 2 == 0 ? 1 : -1;
      for (auto s : m.summands(p))
        for (auto t : n.summands(q)) sum += sign * static_cast<long long>(r.cartan(t, s));
    }
  return sum;
}

PairingMatrix euler_matrix(const AlgebraPtr& a, int cap) {
  const std::size_t n = a->idempotent_count();
  std::vector<PerfectComplex> res;
  PairingMatrix g{Matrix(n, n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    res.push_back(projective_resolution(simple_module(a, i), cap));
    g.basis.push_back("S(" + a->label(a->idempotent(i)) + ")");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.values(i, j) = Rational(static_cast<long>(euler_pairing(res[i], res[j])));
  return g;
}

LeftModuleComplex dual_bimodule(const AlgebraPtr& r) {
  const std::size_t n = r->dim();
  std::vector<SparseMatrix> right(n, SparseMatrix(n, n)), left(n, SparseMatrix(n, n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      // (delta_b . c) has coefficient [b](c d) at delta_d.
      for (const auto& t : r->product(c, d)) right[c].add(d, t.index, t.coeff);
      // (c . delta_b) has coefficient [b](d c) at delta_d.
      for (const auto& t : r->product(d, c)) left[c].add(d, t.index, t.coeff);
    }
  LeftModuleComplex w;
  w.left = r;
  w.complex = Complex::concentrated(Module(r, n, std::move(right)), 0);
  w.left_action.push_back(std::move(left));
  return w;
}

PerfectComplex serre(const PerfectComplex& m, int cap) {
  return resolve_complex(tensor_perfect(m, dual_bimodule(m.ring()), true), cap);
}

std::vector<Vector> kernel_left(const PairingMatrix& g) { return left_kernel_basis(g.values); }
std::vector<Vector> kernel_right(const PairingMatrix& g) { return kernel_basis(g.values); }

SmoothnessCheck check_smooth(const AlgebraPtr& a, int cap) {
  SmoothnessCheck out;
  try {
    out.resolution = projective_resolution(diagonal_bimodule(a), cap);
    out.smooth = true;
    out.length = out.resolution.empty() ? 0 : out.resolution.hi() - out.resolution.lo();
  } catch (const CapExceeded&) {
    out.smooth = false;
  }
  return out;
}

bool check_proper(const AlgebraPtr&) { return true; }

PerfectComplex dual(const PerfectComplex& x, AlgebraPtr target) {
  const auto& f = x.ring()->factors();
  if (!f) throw AlgebraMismatch("dual needs a complex over a bimodule algebra");
  const AlgebraPtr& a_op = f->first;
  const AlgebraPtr& b = f->second;
  if (!target) {
    target = bimodule_algebra(b, opposite(a_op));
  } else if (target->dim() != x.ring()->dim() || !target->factors() ||
             target->factors()->first->dim() != b->dim()) {
    throw AlgebraMismatch("supplied dual target does not match");
  }
  if (x.empty()) return PerfectComplex::zero(target);
  const std::size_t na = a_op->dim(), nb = b->dim();
  const std::size_t ia = a_op->idempotent_count(), ib = b->idempotent_count();
  auto swap_element = [&](const Algebra::Element& e) {
    Algebra::Element out;
    for (const auto& t : e) out.push_back({(t.index % nb) * na + t.index / nb, t.coeff});
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.index < v.index; });
    return out;
  };
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> d;
  for (int m = -x.hi(); m <= -x.lo(); ++m) {
    std::vector<std::size_t> sm;
    for (auto k : x.summands(-m)) sm.push_back((k % ib) * ia + k / ib);
    s.push_back(std::move(sm));
    if (m == -x.lo()) break;
    // Degree m -> m + 1 is the transpose of d^{-m-1}: X^{-m-1} -> X^{-m}.
    const RingMatrix src = x.differential(-m - 1);
    RingMatrix t(src.cols, src.rows);
    for (std::size_t l = 0; l < src.rows; ++l)
      for (std::size_t k = 0; k < src.cols; ++k) t(k, l) = swap_element(src(l, k));
    d.push_back(std::move(t));
  }
  return PerfectComplex(target, -x.hi(), std::move(s), std::move(d));
}

}  // namespace ncmot
