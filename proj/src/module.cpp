#include "ncmot/module.hpp"

#include <stdexcept>

#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

Module::Module(AlgebraPtr over, std::size_t dim, std::vector<SparseMatrix> action)
    : over_(std::move(over)), dim_(dim), action_(std::move(action)) {
  if (!over_) throw std::invalid_argument("module without algebra");
  if (action_.size() != over_->dim()) throw std::invalid_argument("module needs one action matrix per basis element");
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrix has wrong size");
  if (dim_ == 0) return;
  std::vector<std::size_t> weights(dim_, over_->idempotent_count());
  for (std::size_t k = 0; k < over_->idempotent_count(); ++k) {
    const auto& e = action_[over_->idempotent(k)];
    if (!e.is_zero_one_diagonal()) return;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (e.diagonal(j) == 1) {
        if (weights[j] != over_->idempotent_count()) return;
        weights[j] = k;
      }
    }
  }
  for (auto w : weights)
    if (w == over_->idempotent_count()) return;
  weights_ = std::move(weights);
}

Module Module::zero(AlgebraPtr over) {
  const std::size_t n = over->dim();
  return Module(std::move(over), 0, std::vector<SparseMatrix>(n, SparseMatrix(0, 0)));
}

SparseMatrix Module::action_of(const Vector& element) const {
  SparseMatrix out(dim_, dim_);
  for (std::size_t b = 0; b < element.size(); ++b) {
    if (sgn(element[b]) == 0) continue;
    SparseMatrix term = action_[b];
    out += term.scale(element[b]);
  }
  return out;
}

std::vector<std::size_t> Module::weight_indices(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < weights_.size(); ++j)
    if (weights_[j] == k) out.push_back(j);
  return out;
}

std::vector<std::size_t> Module::dimension_vector() const {
  std::vector<std::size_t> out(over_->idempotent_count(), 0);
  if (dim_ == 0) return out;
  if (is_adapted()) {
    for (auto w : weights_) ++out[w];
    return out;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = rank(action_[over_->idempotent(k)].to_dense());
  return out;
}

bool Module::satisfies_axioms() const {
  const std::size_t n = over_->dim();
  if (!(action_of(over_->unit()) == SparseMatrix::identity(dim_))) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = action_of([&] {
        Vector v(n);
        for (const auto& t : over_->product(i, j)) v[t.index] += t.coeff;
        return v;
      }());
      if (!(lhs == action_[j] * action_[i])) return false;
    }
  return true;
}

Module vector_space(std::size_t dim) {
  return Module(Algebra::field(), dim, {SparseMatrix::identity(dim)});
}

bool is_homomorphism(const Module& src, const Module& dst, const Matrix& f) {
  if (!same_algebra(src.algebra(), dst.algebra())) return false;
  if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
  for (std::size_t b = 0; b < src.algebra()->dim(); ++b) {
    if (!(dst.action(b).apply(f) == (src.action(b).transpose().apply(f.transpose())).transpose())) return false;
  }
  return true;
}

Module direct_sum(const Module& a, const Module& b) {
  if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch("direct sum of modules over different algebras");
  std::vector<SparseMatrix> act;
  act.reserve(a.algebra()->dim());
  for (std::size_t k = 0; k < a.algebra()->dim(); ++k) act.push_back(direct_sum(a.action(k), b.action(k)));
  return Module(a.algebra(), a.dim() + b.dim(), std::move(act));
}

Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& over) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), over)) throw AlgebraMismatch("direct sum of modules over different algebras");
    total += p.dim();
  }
  std::vector<SparseMatrix> act(over->dim(), SparseMatrix(total, total));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < over->dim(); ++k) {
      const auto& a = p.action(k);
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& e : a.column(j)) act[k].add(offset + e.row, offset + j, e.value);
    }
    offset += p.dim();
  }
  return Module(over, total, std::move(act));
}

Module restrict_to(const Module& m, const std::vector<std::size_t>& indices) {
  std::vector<SparseMatrix> act;
  for (std::size_t k = 0; k < m.algebra()->dim(); ++k) act.push_back(m.action(k).select(indices, indices));
  return Module(m.algebra(), indices.size(), std::move(act));
}

std::vector<std::size_t> projective_basis(const Algebra& a, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.left_idempotent(b) == k) out.push_back(b);
  return out;
}

Module projective_module(const AlgebraPtr& a, std::size_t k) {
  const auto basis = projective_basis(*a, k);
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  std::vector<SparseMatrix> act(a->dim(), SparseMatrix(basis.size(), basis.size()));
  for (std::size_t c = 0; c < a->dim(); ++c)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& t : a->product(basis[i], c)) act[c].add(pos[t.index], i, t.coeff);
  return Module(a, basis.size(), std::move(act));
}

Module simple_module(const AlgebraPtr& a, std::size_t k) {
  std::vector<SparseMatrix> act(a->dim(), SparseMatrix(1, 1));
  act[a->idempotent(k)].add(0, 0, Rational(1));
  return Module(a, 1, std::move(act));
}

std::vector<Module> simple_modules(const AlgebraPtr& a) {
  std::vector<Module> out;
  for (std::size_t k = 0; k < a->idempotent_count(); ++k) out.push_back(simple_module(a, k));
  return out;
}

Module injective_module(const AlgebraPtr& a, std::size_t k) {
  std::vector<std::size_t> basis;
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (a->right_idempotent(b) == k) basis.push_back(b);
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  std::vector<SparseMatrix> act(a->dim(), SparseMatrix(basis.size(), basis.size()));
  // (delta_b . c)(x) = delta_b(c x): coefficient of delta_d is the b-coefficient of c d.
  for (std::size_t c = 0; c < a->dim(); ++c)
    for (std::size_t d = 0; d < a->dim(); ++d)
      for (const auto& t : a->product(c, d)) {
        if (a->right_idempotent(t.index) != k) continue;
        act[c].add(pos[d], pos[t.index], t.coeff);
      }
  return Module(a, basis.size(), std::move(act));
}

Module diagonal_bimodule(const AlgebraPtr& a, AlgebraPtr env) {
  if (!env) env = enveloping(a);
  if (env->dim() != a->dim() * a->dim()) throw AlgebraMismatch("enveloping algebra has the wrong dimension");
  const std::size_t n = a->dim();
  std::vector<SparseMatrix> act(env->dim(), SparseMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& t : a->product(i, x))
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& u : a->product(t.index, j)) act[i * n + j].add(u.index, x, t.coeff * u.coeff);
  return Module(env, n, std::move(act));
}

namespace {

std::pair<AlgebraPtr, AlgebraPtr> factors_of(const Module& x) {
  const auto& f = x.algebra()->factors();
  if (!f) throw AlgebraMismatch("module is not over a tensor product algebra");
  return *f;
}

}  // namespace

SparseMatrix bimodule_left_action(const Module& x, std::size_t a_basis) {
  const auto [left, right] = factors_of(x);
  SparseMatrix out(x.dim(), x.dim());
  for (std::size_t l = 0; l < right->idempotent_count(); ++l) out += x.action(a_basis * right->dim() + right->idempotent(l));
  return out;
}

SparseMatrix bimodule_right_action(const Module& x, std::size_t b_basis) {
  const auto [left, right] = factors_of(x);
  SparseMatrix out(x.dim(), x.dim());
  for (std::size_t k = 0; k < left->idempotent_count(); ++k) out += x.action(left->idempotent(k) * right->dim() + b_basis);
  return out;
}

std::pair<Module, Matrix> adapt_basis(const Module& m) {
  if (m.is_adapted()) return {m, Matrix::identity(m.dim())};
  std::vector<Vector> columns;
  for (std::size_t k = 0; k < m.algebra()->idempotent_count(); ++k) {
    for (auto& v : image_basis(m.action(m.algebra()->idempotent(k)).to_dense())) columns.push_back(std::move(v));
  }
  if (columns.size() != m.dim()) throw UnsupportedInput("idempotent actions do not decompose the module");
  const Matrix s = Matrix::from_columns(m.dim(), columns);
  const Matrix t = inverse(s);
  std::vector<SparseMatrix> act;
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) act.push_back(SparseMatrix::from_dense(t * m.action(b).apply(s)));
  return {Module(m.algebra(), m.dim(), std::move(act)), t};
}

}  // namespace ncmot
