#include "ncmot/random.hpp"

#include <stdexcept>

namespace ncmot {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Algebra::Element random_corner_element(const Algebra& r, std::size_t t, std::size_t s, Rng& rng, int bound) {
  Algebra::Element out;
  for (std::size_t b = 0; b < r.dim(); ++b) {
    if (r.left_idempotent(b) != t || r.right_idempotent(b) != s) continue;
    const int c = uniform(rng, -bound, bound);
    if (c != 0) out.push_back({b, Rational(c)});
  }
  return out;
}

PerfectComplex random_two_term(const AlgebraPtr& r, Rng& rng, std::size_t max_summands) {
  const int n = static_cast<int>(r->idempotent_count()) - 1;
  auto draw = [&] {
    std::vector<std::size_t> s(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_summands))));
    for (auto& k : s) k = static_cast<std::size_t>(uniform(rng, 0, n));
    return s;
  };
  auto src = draw();
  auto dst = draw();
  RingMatrix d(dst.size(), src.size());
  for (std::size_t l = 0; l < dst.size(); ++l)
    for (std::size_t k = 0; k < src.size(); ++k) d(l, k) = random_corner_element(*r, dst[l], src[k], rng);
  return PerfectComplex(r, 0, {src, dst}, {d});
}

Module random_representation(const AlgebraPtr& a, const Quiver& q, Rng& rng, std::size_t max_dim) {
  if (a->idempotent_count() != q.vertex_count) throw std::invalid_argument("quiver does not match the algebra");
  std::vector<std::size_t> dim(q.vertex_count), offset(q.vertex_count + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    dim[v] = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_dim)));
    offset[v + 1] = offset[v] + dim[v];
  }
  const std::size_t total = offset.back();
  std::vector<SparseMatrix> act(a->dim());
  std::vector<bool> known(a->dim(), false);
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    SparseMatrix e(total, total);
    for (std::size_t i = 0; i < dim[v]; ++i) e.add(offset[v] + i, offset[v] + i, Rational(1));
    act[a->idempotent(v)] = std::move(e);
    known[a->idempotent(v)] = true;
  }
  // Arrows are basis elements of length one: the radical generators.
  for (auto g : a->radical_generators()) {
    const std::size_t s = a->left_idempotent(g), t = a->right_idempotent(g);
    SparseMatrix m(total, total);
    for (std::size_t i = 0; i < dim[s]; ++i)
      for (std::size_t j = 0; j < dim[t]; ++j) {
        const int c = uniform(rng, -2, 2);
        if (c != 0) m.add(offset[t] + j, offset[s] + i, Rational(c));
      }
    act[g] = std::move(m);
    known[g] = true;
  }
  // Longer paths: b = x g with x known gives A_b = A_g A_x.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t x = 0; x < a->dim(); ++x) {
      if (!known[x] || !a->is_radical(x)) continue;
      for (auto g : a->radical_generators()) {
        const auto& p = a->product(x, g);
        if (p.size() != 1 || p[0].coeff != 1 || known[p[0].index]) continue;
        act[p[0].index] = act[g] * act[x];
        known[p[0].index] = true;
        progress = true;
      }
    }
  }
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (!known[b]) throw std::invalid_argument("algebra is not generated by its arrows");
  return Module(a, total, std::move(act));
}

PerfectComplex random_perfect(const AlgebraPtr& r, Rng& rng, const Quiver* q) {
  const int pieces = uniform(rng, 1, 2);
  PerfectComplex out = PerfectComplex::zero(r);
  for (int i = 0; i < pieces; ++i) {
    PerfectComplex piece;
    switch (uniform(rng, 0, q ? 2 : 1)) {
      case 0:
        piece = random_two_term(r, rng);
        break;
      case 1:
        piece = projective_resolution(
            simple_module(r, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r->idempotent_count()) - 1))));
        break;
      default:
        piece = projective_resolution(random_representation(r, *q, rng));
        break;
    }
    out = direct_sum(out, shift(piece, uniform(rng, -1, 1)));
  }
  return out;
}

Correspondence random_correspondence(Workspace& ws, const AlgebraPtr& a, const AlgebraPtr& b, Rng& rng) {
  const AlgebraPtr& r = ws.ring(a, b);
  Correspondence out{a, b, {}};
  const int terms = uniform(rng, 1, 3);
  for (int i = 0; i < terms; ++i) {
    int num = 0;
    while (num == 0) num = uniform(rng, -3, 3);
    Rational c(num, uniform(rng, 1, 3));
    c.canonicalize();
    out.terms.push_back({c, random_perfect(r, rng)});
  }
  return out;
}

}  // namespace ncmot
