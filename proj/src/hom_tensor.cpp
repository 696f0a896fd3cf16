#include <algorithm>
#include <stdexcept>

#include "ncmot/complex.hpp"
#include "ncmot/errors.hpp"

namespace ncmot {

namespace {

SparseMatrix element_action(const std::vector<SparseMatrix>& basis_action, const Algebra::Element& e, std::size_t dim) {
  SparseMatrix out(dim, dim);
  for (const auto& t : e) {
    SparseMatrix term = basis_action[t.index];
    out += term.scale(t.coeff);
  }
  return out;
}

}  // namespace

Complex hom_complex(const PerfectComplex& m, const Complex& input) {
  if (!same_algebra(m.ring(), input.algebra())) throw AlgebraMismatch("hom complex between different algebras");
  const auto field = Algebra::field();
  if (m.empty() || input.empty()) return Complex::zero(field);
  const Complex n = input.adapted();
  const Algebra& r = *m.ring();
  const int lo = n.lo() - m.hi(), hi = n.hi() - m.lo();

  // weight[q][s] = basis indices of N^q e_s.
  std::map<int, std::vector<std::vector<std::size_t>>> weight;
  for (int q = n.lo(); q <= n.hi(); ++q) {
    auto& w = weight[q];
    w.resize(r.idempotent_count());
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = n.term(q).weight_indices(s);
  }
  auto block = [&](int q, std::size_t s) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    if (q < n.lo() || q > n.hi()) return none;
    return weight[q][s];
  };

  // offsets[i][(p, k)] inside degree i.
  auto layout = [&](int i) {
    std::map<std::pair<int, std::size_t>, std::size_t> off;
    std::size_t total = 0;
    for (int p = m.lo(); p <= m.hi(); ++p) {
      const auto& sp = m.summands(p);
      for (std::size_t k = 0; k < sp.size(); ++k) {
        off[{p, k}] = total;
        total += block(p + i, sp[k]).size();
      }
    }
    return std::make_pair(off, total);
  };

  std::vector<Module> terms;
  std::vector<Matrix> ds;
  auto cur = layout(lo);
  for (int i = lo; i <= hi; ++i) {
    terms.push_back(vector_space(cur.second));
    if (i == hi) break;
    auto next = layout(i + 1);
    Matrix d(next.second, cur.second);
    const Rational sign = (i % 2 == 0) ? Rational(-1) : Rational(1);  // -(-1)^i
    for (int p = m.lo(); p <= m.hi(); ++p) {
      const auto& sp = m.summands(p);
      const int q = p + i;
      for (std::size_t k = 0; k < sp.size(); ++k) {
        const auto& cols = block(q, sp[k]);
        const auto& rows = block(q + 1, sp[k]);
        if (!cols.empty() && !rows.empty()) {
          const Matrix dn = n.differential(q);
          const std::size_t r0 = next.first.at({p, k}), c0 = cur.first.at({p, k});
          for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) d(r0 + a, c0 + b) = dn(rows[a], cols[b]);
        }
      }
      if (p + 1 > m.hi()) continue;
      // f d_P: component (p + 1, l) of degree i feeds (p, k) of degree i + 1.
      const RingMatrix dp = m.differential(p);
      const auto& sp1 = m.summands(p + 1);
      const int q1 = p + 1 + i;
      if (q1 < n.lo() || q1 > n.hi()) continue;
      const Module& nq = n.term(q1);
      for (std::size_t k = 0; k < sp.size(); ++k)
        for (std::size_t l = 0; l < sp1.size(); ++l) {
          const auto& e = dp(l, k);
          if (e.empty()) continue;
          const auto& rows = block(q1, sp[k]);
          const auto& cols = block(q1, sp1[l]);
          if (rows.empty() || cols.empty()) continue;
          const SparseMatrix act = element_action(nq.actions(), e, nq.dim()).select(rows, cols);
          const std::size_t r0 = next.first.at({p, k}), c0 = cur.first.at({p + 1, l});
          for (std::size_t b = 0; b < act.cols(); ++b)
            for (const auto& entry : act.column(b)) d(r0 + entry.row, c0 + b) += sign * entry.value;
        }
    }
    ds.push_back(std::move(d));
    cur = std::move(next);
  }
  return Complex(field, lo, std::move(terms), std::move(ds));
}

bool LeftModuleComplex::verify() const {
  if (!complex.verify()) return false;
  if (left_action.size() != static_cast<std::size_t>(complex.hi() - complex.lo() + 1) && !complex.empty()) return false;
  const Algebra& r = *left;
  for (int n = complex.lo(); n <= complex.hi(); ++n) {
    const auto& l = action(n);
    const Module& m = complex.term(n);
    if (l.size() != r.dim()) return false;
    for (std::size_t a = 0; a < r.dim(); ++a) {
      for (std::size_t b = 0; b < r.dim(); ++b) {
        const SparseMatrix prod = element_action(l, r.product(a, b), m.dim());
        if (!(prod == l[a] * l[b])) return false;
      }
      for (std::size_t s = 0; s < m.algebra()->dim(); ++s)
        if (!(l[a] * m.action(s) == m.action(s) * l[a])) return false;
      if (n < complex.hi()) {
        const Matrix d = complex.differential(n);
        if (!(action(n + 1)[a].apply(d) == (l[a].transpose().apply(d.transpose())).transpose())) return false;
      }
    }
  }
  return true;
}

Complex tensor_perfect(const PerfectComplex& p, const LeftModuleComplex& w, bool perfect_first) {
  if (!same_algebra(p.ring(), w.left)) throw AlgebraMismatch("tensor over mismatched middle algebra");
  const Complex& c = w.complex;
  const AlgebraPtr& s_alg = c.algebra();
  if (p.empty() || c.empty()) return Complex::zero(s_alg);
  const Algebra& r = *p.ring();

  // lw[q][s] = basis indices of e_s W^q.
  std::map<int, std::vector<std::vector<std::size_t>>> lw;
  for (int q = c.lo(); q <= c.hi(); ++q) {
    auto& v = lw[q];
    v.assign(r.idempotent_count(), {});
    const auto& l = w.action(q);
    std::vector<int> owner(c.dim(q), -1);
    for (std::size_t s = 0; s < r.idempotent_count(); ++s) {
      const SparseMatrix& e = l[r.idempotent(s)];
      if (!e.is_zero_one_diagonal()) throw UnsupportedInput("left action is not diagonal on idempotents");
      for (std::size_t j = 0; j < c.dim(q); ++j)
        if (e.diagonal(j) == 1) {
          if (owner[j] >= 0) throw UnsupportedInput("left idempotents overlap");
          owner[j] = static_cast<int>(s);
          v[s].push_back(j);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) throw UnsupportedInput("left idempotents do not sum to one");
  }
  auto block = [&](int q, std::size_t s) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    if (q < c.lo() || q > c.hi()) return none;
    return lw[q][s];
  };

  const int lo = p.lo() + c.lo(), hi = p.hi() + c.hi();
  struct Slot {
    int p;
    std::size_t k;
    int q;
  };
  auto layout = [&](int total) {
    std::vector<std::pair<Slot, std::size_t>> slots;
    std::size_t size = 0;
    for (int a = p.lo(); a <= p.hi(); ++a) {
      const int q = total - a;
      if (q < c.lo() || q > c.hi()) continue;
      const auto& sa = p.summands(a);
      for (std::size_t k = 0; k < sa.size(); ++k) {
        slots.push_back({{a, k, q}, size});
        size += block(q, sa[k]).size();
      }
    }
    return std::make_pair(slots, size);
  };
  auto find = [](const std::vector<std::pair<Slot, std::size_t>>& slots, int a, std::size_t k) -> long {
    for (const auto& [sl, off] : slots)
      if (sl.p == a && sl.k == k) return static_cast<long>(off);
    return -1;
  };

  std::vector<Module> terms;
  std::vector<Matrix> ds;
  auto cur = layout(lo);
  for (int t = lo; t <= hi; ++t) {
    std::vector<Module> parts;
    for (const auto& [sl, off] : cur.first) {
      const auto& idx = block(sl.q, p.summands(sl.p)[sl.k]);
      parts.push_back(restrict_to(c.term(sl.q), idx));
    }
    terms.push_back(direct_sum(parts, s_alg));
    if (t == hi) break;
    auto next = layout(t + 1);
    Matrix d(next.second, cur.second);
    for (const auto& [sl, off] : cur.first) {
      const std::size_t sk = p.summands(sl.p)[sl.k];
      const auto& cols = block(sl.q, sk);
      if (cols.empty()) continue;
      // W-differential.
      if (sl.q + 1 <= c.hi()) {
        const long r0 = find(next.first, sl.p, sl.k);
        const auto& rows = block(sl.q + 1, sk);
        if (r0 >= 0 && !rows.empty()) {
          const Rational sign = perfect_first ? Rational(sl.p % 2 == 0 ? 1 : -1) : Rational(1);
          const Matrix dw = c.differential(sl.q);
          for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) d(r0 + a, off + b) = sign * dw(rows[a], cols[b]);
        }
      }
      // P-differential.
      if (sl.p + 1 <= p.hi()) {
        const RingMatrix dp = p.differential(sl.p);
        const auto& sp1 = p.summands(sl.p + 1);
        const Rational sign = perfect_first ? Rational(1) : Rational(sl.q % 2 == 0 ? 1 : -1);
        const auto& l = w.action(sl.q);
        for (std::size_t m = 0; m < sp1.size(); ++m) {
          const auto& e = dp(m, sl.k);
          if (e.empty()) continue;
          const auto& rows = block(sl.q, sp1[m]);
          if (rows.empty()) continue;
          const long r0 = find(next.first, sl.p + 1, m);
          const SparseMatrix act = element_action(l, e, c.dim(sl.q)).select(rows, cols);
          for (std::size_t b = 0; b < act.cols(); ++b)
            for (const auto& entry : act.column(b)) d(r0 + entry.row, off + b) += sign * entry.value;
        }
      }
    }
    ds.push_back(std::move(d));
    cur = std::move(next);
  }
  return Complex(s_alg, lo, std::move(terms), std::move(ds));
}

namespace {

std::pair<AlgebraPtr, AlgebraPtr> factors_of(const AlgebraPtr& a, const char* what) {
  const auto& f = a->factors();
  if (!f) throw AlgebraMismatch(std::string(what) + " is not over a bimodule algebra");
  return *f;
}

SparseMatrix left_mult(const Algebra& a, std::size_t x) {
  SparseMatrix out(a.dim(), a.dim());
  for (std::size_t u = 0; u < a.dim(); ++u)
    for (const auto& t : a.product(x, u)) out.add(t.index, u, t.coeff);
  return out;
}

SparseMatrix right_mult(const Algebra& a, std::size_t x) {
  SparseMatrix out(a.dim(), a.dim());
  for (std::size_t u = 0; u < a.dim(); ++u)
    for (const auto& t : a.product(u, x)) out.add(t.index, u, t.coeff);
  return out;
}

AlgebraPtr check_target(AlgebraPtr target, const AlgebraPtr& left, const AlgebraPtr& right) {
  if (!target) return tensor(left, right);
  const auto& f = target->factors();
  if (!f || !same_algebra(f->first, left) || !same_algebra(f->second, right))
    throw AlgebraMismatch("supplied target algebra does not match the outer factors");
  return target;
}

}  // namespace

Complex tensor_over(const PerfectComplex& x, const Complex& y_in, AlgebraPtr target) {
  const auto [a_op, b] = factors_of(x.ring(), "left factor");
  const auto [b_op, c_alg] = factors_of(y_in.algebra(), "right factor");
  if (!same_algebra(opposite(b_op), b)) throw AlgebraMismatch("middle algebras do not match");
  const AlgebraPtr s = check_target(std::move(target), a_op, c_alg);
  if (x.empty() || y_in.empty()) return Complex::zero(s);
  const Complex y = y_in.adapted();
  const Algebra& a = *a_op;  // products in A read as u a = a *_op u
  const std::size_t na = a.dim();

  std::vector<SparseMatrix> a_right(na), a_left(na);  // u -> u a, u -> a u in A
  for (std::size_t i = 0; i < na; ++i) {
    a_right[i] = left_mult(a, i);  // in A^op, a * u = u a in A
    a_left[i] = right_mult(a, i);
  }

  LeftModuleComplex w;
  w.left = x.ring();
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int q = y.lo(); q <= y.hi(); ++q) {
    const Module& yq = y.term(q);
    std::vector<SparseMatrix> right_act;
    right_act.reserve(s->dim());
    for (std::size_t al = 0; al < na; ++al)
      for (std::size_t g = 0; g < c_alg->dim(); ++g)
        right_act.push_back(kronecker(a_left[al], bimodule_right_action(yq, g)));
    terms.emplace_back(s, na * yq.dim(), std::move(right_act));
    std::vector<SparseMatrix> left_act;
    left_act.reserve(x.ring()->dim());
    for (std::size_t ai = 0; ai < na; ++ai)
      for (std::size_t bi = 0; bi < b->dim(); ++bi) left_act.push_back(kronecker(a_right[ai], bimodule_left_action(yq, bi)));
    w.left_action.push_back(std::move(left_act));
    if (q < y.hi()) ds.push_back(kronecker(Matrix::identity(na), y.differential(q)));
  }
  w.complex = Complex(s, y.lo(), std::move(terms), std::move(ds));
  return tensor_perfect(x, w, true);
}

Complex tensor_over(const Complex& x_in, const PerfectComplex& y, AlgebraPtr target) {
  const auto [a_op, b] = factors_of(x_in.algebra(), "left factor");
  const auto [b_op, c_alg] = factors_of(y.ring(), "right factor");
  if (!same_algebra(opposite(b_op), b)) throw AlgebraMismatch("middle algebras do not match");
  const AlgebraPtr s = check_target(std::move(target), a_op, c_alg);
  if (x_in.empty() || y.empty()) return Complex::zero(s);
  const Complex x = x_in.adapted();
  const Algebra& c = *c_alg;
  const std::size_t nc = c.dim();

  std::vector<SparseMatrix> c_left(nc), c_right(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    c_left[i] = left_mult(c, i);
    c_right[i] = right_mult(c, i);
  }

  LeftModuleComplex w;
  w.left = y.ring();
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int p = x.lo(); p <= x.hi(); ++p) {
    const Module& xp = x.term(p);
    std::vector<SparseMatrix> right_act;
    right_act.reserve(s->dim());
    for (std::size_t al = 0; al < a_op->dim(); ++al)
      for (std::size_t g = 0; g < nc; ++g) right_act.push_back(kronecker(bimodule_left_action(xp, al), c_right[g]));
    terms.emplace_back(s, xp.dim() * nc, std::move(right_act));
    std::vector<SparseMatrix> left_act;
    left_act.reserve(y.ring()->dim());
    for (std::size_t be = 0; be < b->dim(); ++be)
      for (std::size_t g = 0; g < nc; ++g) left_act.push_back(kronecker(bimodule_right_action(xp, be), c_left[g]));
    w.left_action.push_back(std::move(left_act));
    if (p < x.hi()) ds.push_back(kronecker(x.differential(p), Matrix::identity(nc)));
  }
  w.complex = Complex(s, x.lo(), std::move(terms), std::move(ds));
  return tensor_perfect(y, w, false);
}

}  // namespace ncmot
