#include <map>

#include "ncmot/complex.hpp"
#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Resolution resolve_with_map(const Complex& input, int cap) {
  const Complex c = input.adapted();
  const AlgebraPtr& r = c.algebra();
  Resolution res;
  res.target = c;
  if (c.empty()) {
    res.complex = PerfectComplex::zero(r);
    return res;
  }

  std::vector<std::vector<std::size_t>> basis(r->idempotent_count());
  for (std::size_t k = 0; k < basis.size(); ++k) basis[k] = projective_basis(*r, k);

  std::map<int, std::vector<std::size_t>> summands;
  std::map<int, RingMatrix> differentials;  // degree n: P^n -> P^{n+1}

  // State for degree n + 1.
  std::vector<std::size_t> p1_summands;
  Module p1 = Module::zero(r);
  Matrix d_p1(0, 0);  // P^{n+1} -> P^{n+2}
  Matrix phi1(c.dim(c.hi() + 1), 0);
  std::size_t p2_dim = 0;

  int n = c.hi();
  for (;; --n) {
    if (n < c.lo() && p1_summands.empty()) break;

    const Module& cn = c.term(n);
    const std::size_t dc = cn.dim(), dp = p1.dim(), dc1 = c.dim(n + 1);
    Matrix delta(dc1 + p2_dim, dc + dp);
    delta.set_block(0, 0, c.differential(n));
    delta.set_block(0, dc, phi1);
    Matrix neg = d_p1;
    neg *= Rational(-1);
    delta.set_block(dc1, dc, neg);
    const auto cycles = kernel_basis(delta);
    if (n < c.lo() && cycles.empty()) break;

    const Module cone_n = direct_sum(cn, p1);
    SubspaceBuilder span(dc + dp);
    for (const auto& b : image_basis(c.differential(n - 1))) span.add(concat(b, Vector(dp)));
    for (const auto& z : cycles)
      for (auto g : r->radical_generators()) {
        Vector v = cone_n.action(g).apply(z);
        if (!is_zero(v)) span.add(std::move(v));
      }

    std::vector<std::size_t> gens_idem;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < r->idempotent_count(); ++i) {
      for (const auto& z : cycles) {
        Vector zi(z.size());
        for (std::size_t j = 0; j < z.size(); ++j)
          if (cone_n.weight(j) == i) zi[j] = z[j];
        if (is_zero(zi)) continue;
        if (span.add(zi)) {
          gens_idem.push_back(i);
          gens.push_back(std::move(zi));
        }
      }
    }

    if (!gens.empty() && c.lo() - n > cap)
      throw CapExceeded("projective resolution longer than the cap of " + std::to_string(cap));

    RingMatrix d(p1_summands.size(), gens.size());
    std::size_t total = 0;
    for (auto i : gens_idem) total += basis[i].size();
    Matrix phi(dc, total);
    std::size_t col = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Vector& g = gens[k];
      std::size_t off = dc;
      for (std::size_t l = 0; l < p1_summands.size(); ++l) {
        const auto& bl = basis[p1_summands[l]];
        Vector coords(r->dim());
        for (std::size_t j = 0; j < bl.size(); ++j) coords[bl[j]] = -g[off + j];
        d(l, k) = ring::from_vector(coords);
        off += bl.size();
      }
      for (auto b : basis[gens_idem[k]]) {
        const Vector image = cone_n.action(b).apply(g);
        for (std::size_t j = 0; j < dc; ++j) phi(j, col) = image[j];
        ++col;
      }
    }

    summands[n] = gens_idem;
    if (n < c.hi()) differentials[n] = d;
    res.comparison[n] = phi;

    p2_dim = p1.dim();
    d_p1 = explicit_map(*r, gens_idem, p1_summands, d);
    p1 = projective_sum(r, gens_idem);
    p1_summands = std::move(gens_idem);
    phi1 = std::move(phi);
  }

  const int lo = n + 1;
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> ds;
  for (int m = lo; m <= c.hi(); ++m) {
    s.push_back(summands[m]);
    if (m < c.hi()) ds.push_back(differentials[m]);
  }
  res.complex = PerfectComplex(r, lo, std::move(s), std::move(ds));
  return res;
}

PerfectComplex resolve_complex(const Complex& c, int cap) { return resolve_with_map(c, cap).complex.trimmed(); }

PerfectComplex projective_resolution(const Module& m, int cap) {
  return resolve_complex(Complex::concentrated(m, 0), cap);
}

}  // namespace ncmot
