#include "ncmot/hochschild.hpp"

#include <map>

#include "ncmot/derived.hpp"
#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

namespace {

GradedDims to_homological(const GradedDims& cohomological) {
  GradedDims out;
  out.lo = -(cohomological.lo + static_cast<int>(cohomological.dims.size()) - 1);
  out.dims.assign(cohomological.dims.rbegin(), cohomological.dims.rend());
  return out;
}

void check_bimodule_algebra(const AlgebraPtr& env, const AlgebraPtr& over) {
  if (!same_algebra(env, over)) throw AlgebraMismatch("coefficients are not bimodules over this algebra");
}

}  // namespace

HochschildContext::HochschildContext(AlgebraPtr a, int cap, AlgebraPtr env)
    : a_(std::move(a)), env_(env ? std::move(env) : ncmot::enveloping(a_)) {
  diag_ = projective_resolution(diagonal_bimodule(a_, env_), cap);
}

HHProfile HochschildContext::homology(const Complex& w_in) const {
  check_bimodule_algebra(env_, w_in.algebra());
  HHProfile out{a_, {}};
  if (w_in.empty()) return out;
  const Complex w = w_in.adapted();
  const std::size_t n = a_->dim();
  LeftModuleComplex lw;
  lw.left = env_;
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int q = w.lo(); q <= w.hi(); ++q) {
    const Module& m = w.term(q);
    terms.push_back(vector_space(m.dim()));
    if (q < w.hi()) ds.push_back(w.differential(q));
    // (a (x) b) . x = b x a, the right action of b (x) a.
    std::vector<SparseMatrix> left;
    left.reserve(env_->dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) left.push_back(m.action(j * n + i));
    lw.left_action.push_back(std::move(left));
  }
  lw.complex = Complex(Algebra::field(), w.lo(), std::move(terms), std::move(ds));
  out.dims = to_homological(homology_dims(tensor_perfect(diag_, lw, true)));
  return out;
}

long long HochschildContext::euler_characteristic(const Complex& w_in) const {
  check_bimodule_algebra(env_, w_in.algebra());
  if (w_in.empty() || diag_.empty()) return 0;
  const Complex w = w_in.adapted();
  const std::size_t m = a_->idempotent_count();
  long long sum = 0;
  for (int q = w.lo(); q <= w.hi(); ++q) {
    std::vector<std::size_t> count(env_->idempotent_count(), 0);
    for (auto wt : w.term(q).weights()) ++count[wt];
    for (int p = diag_.lo(); p <= diag_.hi(); ++p) {
      const long long sign = (p + q) % 2 == 0 ? 1 : -1;
      for (auto s : diag_.summands(p)) {
        const std::size_t k = s / m, l = s % m;  // left weight (k, l) is right weight (l, k)
        sum += sign * static_cast<long long>(count[l * m + k]);
      }
    }
  }
  return sum;
}

HHProfile hochschild(const AlgebraPtr& a, const Complex& w, int cap) { return HochschildContext(a, cap).homology(w); }

HHProfile hochschild(const AlgebraPtr& a, const Module& w, int cap) {
  return hochschild(a, Complex::concentrated(w, 0), cap);
}

Module free_bimodule(const AlgebraPtr& a) {
  const AlgebraPtr env = enveloping(a);
  const std::size_t n = env->dim();
  std::vector<SparseMatrix> act(n, SparseMatrix(n, n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& t : env->product(x, c)) act[c].add(t.index, x, t.coeff);
  return Module(env, n, std::move(act));
}

namespace {

struct BarChain {
  std::vector<std::size_t> arrows;  // radical basis elements r_1..r_n
  std::size_t start;                // left idempotent of r_1
  std::size_t end;                  // right idempotent of r_n
};

// Column-sparse accumulation of a boundary map into a dense matrix.
void add_column(Matrix& d, std::size_t row_offset, const Vector& image, std::size_t col, const Rational& sign,
                const std::vector<long>& position) {
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (sgn(image[j]) == 0) continue;
    if (position[j] < 0) throw std::logic_error("bar differential leaves the coefficient weight space");
    d(row_offset + static_cast<std::size_t>(position[j]), col) += sign * image[j];
  }
}

}  // namespace

HHProfile bar_oracle(const AlgebraPtr& a, const Module& w_in, int top) {
  const AlgebraPtr env = enveloping(a);
  check_bimodule_algebra(env, w_in.algebra());
  const Module w = adapt_basis(w_in).first;
  const std::size_t m = a->idempotent_count();
  std::vector<std::size_t> rad;
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (a->is_radical(b)) rad.push_back(b);

  // coefficient basis for e_t W e_s, and positions inside it
  std::vector<std::vector<std::size_t>> coeff(m * m);
  std::vector<std::vector<long>> position(m * m, std::vector<long>(w.dim(), -1));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s) {
      coeff[t * m + s] = w.weight_indices(t * m + s);
      for (std::size_t i = 0; i < coeff[t * m + s].size(); ++i) position[t * m + s][coeff[t * m + s][i]] = static_cast<long>(i);
    }
  std::vector<SparseMatrix> right(a->dim()), left(a->dim());
  for (auto r : rad) {
    right[r] = bimodule_right_action(w, r);
    left[r] = bimodule_left_action(w, r);
  }

  std::vector<std::vector<BarChain>> chains(static_cast<std::size_t>(top) + 2);
  for (std::size_t k = 0; k < m; ++k) chains[0].push_back({{}, k, k});
  for (std::size_t n = 1; n < chains.size(); ++n)
    for (const auto& c : chains[n - 1])
      for (auto r : rad) {
        if (a->left_idempotent(r) != c.end) continue;
        BarChain next = c;
        next.arrows.push_back(r);
        next.end = a->right_idempotent(r);
        chains[n].push_back(std::move(next));
      }

  auto key = [](const BarChain& c) { return std::make_pair(c.arrows, c.arrows.empty() ? c.start : 0); };
  std::vector<std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t>> offset(chains.size());
  std::vector<std::size_t> dims(chains.size(), 0);
  for (std::size_t n = 0; n < chains.size(); ++n)
    for (const auto& c : chains[n]) {
      offset[n][key(c)] = dims[n];
      dims[n] += coeff[c.end * m + c.start].size();
    }

  // ranks[n] = rank of b_n: C_n -> C_{n-1}
  std::vector<std::size_t> ranks(chains.size(), 0);
  for (std::size_t n = 1; n < chains.size(); ++n) {
    Matrix d(dims[n - 1], dims[n]);
    for (const auto& c : chains[n]) {
      const auto& cb = coeff[c.end * m + c.start];
      const std::size_t col0 = offset[n].at(key(c));
      const std::size_t len = c.arrows.size();
      for (std::size_t i = 0; i < cb.size(); ++i) {
        Vector x(w.dim());
        x[cb[i]] = 1;
        const std::size_t col = col0 + i;
        // w r_1 (x) r_2 ... r_n
        {
          BarChain f{{c.arrows.begin() + 1, c.arrows.end()}, 0, c.end};
          f.start = len > 1 ? a->left_idempotent(c.arrows[1]) : c.end;
          const std::size_t wt = f.end * m + f.start;
          add_column(d, offset[n - 1].at(key(f)), right[c.arrows[0]].apply(x), col, Rational(1), position[wt]);
        }
        // faces multiplying r_j r_{j+1}
        for (std::size_t j = 0; j + 1 < len; ++j) {
          const Rational sign = (j + 1) % 2 == 0 ? Rational(1) : Rational(-1);
          for (const auto& t : a->product(c.arrows[j], c.arrows[j + 1])) {
            BarChain f = c;
            f.arrows.erase(f.arrows.begin() + static_cast<long>(j) + 1);
            f.arrows[j] = t.index;
            const std::size_t wt = f.end * m + f.start;
            d(offset[n - 1].at(key(f)) + static_cast<std::size_t>(position[wt][cb[i]]), col) += sign * t.coeff;
          }
        }
        // (-1)^n r_n w (x) r_1 ... r_{n-1}
        {
          BarChain f{{c.arrows.begin(), c.arrows.end() - 1}, c.start, 0};
          f.end = len > 1 ? a->right_idempotent(c.arrows[len - 2]) : c.start;
          const std::size_t wt = f.end * m + f.start;
          const Rational sign = len % 2 == 0 ? Rational(1) : Rational(-1);
          add_column(d, offset[n - 1].at(key(f)), left[c.arrows[len - 1]].apply(x), col, sign, position[wt]);
        }
      }
    }
    ranks[n] = rank(d);
  }

  HHProfile out{a, {0, {}}};
  for (int n = 0; n <= top; ++n) {
    const auto u = static_cast<std::size_t>(n);
    out.dims.dims.push_back(dims[u] - ranks[u] - ranks[u + 1]);
  }
  return out;
}

HHProfile bar_oracle_full(const AlgebraPtr& a, const Module& w, int top) {
  const AlgebraPtr env = enveloping(a);
  check_bimodule_algebra(env, w.algebra());
  const std::size_t da = a->dim(), dw = w.dim();
  std::vector<SparseMatrix> right(da), left(da);
  for (std::size_t b = 0; b < da; ++b) {
    right[b] = bimodule_right_action(w, b);
    left[b] = bimodule_left_action(w, b);
  }
  // C_n has basis (x, a_1, ..., a_n), flattened with x most significant.
  std::vector<std::size_t> dims{dw};
  for (int n = 1; n <= top + 1; ++n) dims.push_back(dims.back() * da);
  std::vector<std::size_t> ranks(dims.size(), 0);
  for (std::size_t n = 1; n < dims.size(); ++n) {
    Matrix d(dims[n - 1], dims[n]);
    std::vector<std::size_t> idx(n);
    for (std::size_t col = 0; col < dims[n]; ++col) {
      std::size_t rest = col;
      for (std::size_t j = n; j-- > 0;) {
        idx[j] = rest % da;
        rest /= da;
      }
      const std::size_t x = rest;
      auto flatten = [&](std::size_t xi, const std::vector<std::size_t>& as) {
        std::size_t v = xi;
        for (auto ai : as) v = v * da + ai;
        return v;
      };
      std::vector<std::size_t> tail(idx.begin() + 1, idx.end());
      for (const auto& e : right[idx[0]].column(x)) d(flatten(e.row, tail), col) += e.value;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        const Rational sign = (j + 1) % 2 == 0 ? Rational(1) : Rational(-1);
        for (const auto& t : a->product(idx[j], idx[j + 1])) {
          std::vector<std::size_t> f(idx.begin(), idx.end());
          f.erase(f.begin() + static_cast<long>(j) + 1);
          f[j] = t.index;
          d(flatten(x, f), col) += sign * t.coeff;
        }
      }
      std::vector<std::size_t> head(idx.begin(), idx.end() - 1);
      const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
      for (const auto& e : left[idx[n - 1]].column(x)) d(flatten(e.row, head), col) += sign * e.value;
    }
    ranks[n] = rank(d);
  }
  HHProfile out{a, {0, {}}};
  for (int n = 0; n <= top; ++n) {
    const auto u = static_cast<std::size_t>(n);
    out.dims.dims.push_back(dims[u] - ranks[u] - ranks[u + 1]);
  }
  return out;
}

}  // namespace ncmot
