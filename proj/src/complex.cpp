#include "ncmot/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

std::size_t GradedDims::operator[](int n) const {
  if (n < lo || n >= lo + static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(n - lo)];
}

long long GradedDims::euler_characteristic() const {
  long long sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int n = lo + static_cast<int>(i);
    sum += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
  }
  return sum;
}

int GradedDims::first_nonzero() const {
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != 0) return lo + static_cast<int>(i);
  return lo + static_cast<int>(dims.size());
}

int GradedDims::last_nonzero() const {
  for (std::size_t i = dims.size(); i-- > 0;)
    if (dims[i] != 0) return lo + static_cast<int>(i);
  return lo - 1;
}

bool GradedDims::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

bool operator==(const GradedDims& a, const GradedDims& b) {
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.lo + static_cast<int>(a.dims.size()), b.lo + static_cast<int>(b.dims.size()));
  for (int n = lo; n < hi; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

Complex::Complex(AlgebraPtr over, int lo, std::vector<Module> terms, std::vector<Matrix> differentials)
    : over_(std::move(over)), lo_(lo), terms_(std::move(terms)), differentials_(std::move(differentials)) {
  if (!over_) throw std::invalid_argument("complex without algebra");
  zero_ = Module::zero(over_);
  if (terms_.empty()) {
    differentials_.clear();
    return;
  }
  if (differentials_.size() + 1 != terms_.size())
    throw std::invalid_argument("complex needs one differential between consecutive terms");
  for (const auto& t : terms_)
    if (!same_algebra(t.algebra(), over_)) throw AlgebraMismatch("complex term over a different algebra");
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    if (differentials_[i].rows() != terms_[i + 1].dim() || differentials_[i].cols() != terms_[i].dim())
      throw std::invalid_argument("differential has wrong size");
  }
}

Complex Complex::concentrated(const Module& m, int degree) { return Complex(m.algebra(), degree, {m}, {}); }

Complex Complex::zero(AlgebraPtr over) { return Complex(std::move(over), 0, {}, {}); }

const Module& Complex::term(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return terms_[static_cast<std::size_t>(n - lo_)];
}

Matrix Complex::differential(int n) const {
  if (n >= lo_ && n < hi()) return differentials_[static_cast<std::size_t>(n - lo_)];
  return Matrix(dim(n + 1), dim(n));
}

GradedDims Complex::dims() const {
  GradedDims g{lo_, {}};
  for (const auto& t : terms_) g.dims.push_back(t.dim());
  return g;
}

bool Complex::is_complex() const {
  for (int n = lo_; n + 1 < hi(); ++n)
    if (!(differential(n + 1) * differential(n)).is_zero()) return false;
  return true;
}

bool Complex::verify() const {
  if (!is_complex()) return false;
  for (const auto& t : terms_)
    if (!t.satisfies_axioms()) return false;
  for (int n = lo_; n < hi(); ++n)
    if (!is_homomorphism(term(n), term(n + 1), differential(n))) return false;
  return true;
}

Complex Complex::trimmed() const {
  int first = lo_, last = hi();
  while (first <= last && dim(first) == 0) ++first;
  while (last >= first && dim(last) == 0) --last;
  if (first > last) return zero(over_);
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int n = first; n <= last; ++n) {
    terms.push_back(term(n));
    if (n < last) ds.push_back(differential(n));
  }
  return Complex(over_, first, std::move(terms), std::move(ds));
}

Complex Complex::adapted() const {
  std::vector<Module> terms;
  std::vector<Matrix> change, change_inv;
  bool all_adapted = true;
  for (const auto& t : terms_) all_adapted = all_adapted && t.is_adapted();
  if (all_adapted) return *this;
  for (const auto& t : terms_) {
    auto [m, tr] = adapt_basis(t);
    terms.push_back(std::move(m));
    change_inv.push_back(inverse(tr));
    change.push_back(std::move(tr));
  }
  std::vector<Matrix> ds;
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i) ds.push_back(change[i + 1] * differentials_[i] * change_inv[i]);
  return Complex(over_, lo_, std::move(terms), std::move(ds));
}

HomologyGroup homology(const Complex& c, int n) {
  HomologyGroup h;
  SubspaceBuilder builder(c.dim(n));
  for (auto& v : image_basis(c.differential(n - 1))) builder.add(std::move(v));
  for (auto& z : kernel_basis(c.differential(n))) {
    if (builder.add(z)) h.representatives.push_back(std::move(z));
  }
  h.dim = h.representatives.size();
  return h;
}

std::size_t homology_dim(const Complex& c, int n) {
  return c.dim(n) - rank(c.differential(n)) - rank(c.differential(n - 1));
}

GradedDims homology_dims(const Complex& c) {
  GradedDims g{c.lo(), {}};
  if (c.empty()) return g;
  std::vector<std::size_t> ranks;  // ranks[i] = rank d^{lo + i}
  for (int n = c.lo(); n < c.hi(); ++n) ranks.push_back(rank(c.differential(n)));
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const std::size_t i = static_cast<std::size_t>(n - c.lo());
    const std::size_t out = i < ranks.size() ? ranks[i] : 0;
    const std::size_t in = i > 0 ? ranks[i - 1] : 0;
    g.dims.push_back(c.dim(n) - out - in);
  }
  return g;
}

long long euler_characteristic(const Complex& c) { return c.dims().euler_characteristic(); }

Complex shift(const Complex& c, int k) {
  if (c.empty()) return c;
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    terms.push_back(c.term(n));
    if (n < c.hi()) {
      Matrix d = c.differential(n);
      if (k % 2 != 0) d *= Rational(-1);
      ds.push_back(std::move(d));
    }
  }
  return Complex(c.algebra(), c.lo() + k, std::move(terms), std::move(ds));
}

namespace {

std::pair<int, int> joint_range(const Complex& a, const Complex& b) {
  if (a.empty()) return {b.lo(), b.hi()};
  if (b.empty()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Matrix map_at(const ChainMap& f, int n, std::size_t rows, std::size_t cols) {
  auto it = f.find(n);
  if (it == f.end()) return Matrix(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols) throw std::invalid_argument("chain map component has wrong size");
  return it->second;
}

}  // namespace

Complex direct_sum(const Complex& a, const Complex& b) {
  if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch("direct sum of complexes over different algebras");
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto [lo, hi] = joint_range(a, b);
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(direct_sum(a.term(n), b.term(n)));
    if (n < hi) ds.push_back(direct_sum(a.differential(n), b.differential(n)));
  }
  return Complex(a.algebra(), lo, std::move(terms), std::move(ds));
}

Complex cone(const Complex& x, const Complex& y, const ChainMap& f) {
  if (!same_algebra(x.algebra(), y.algebra())) throw AlgebraMismatch("cone of a map between different algebras");
  const Complex xs = shift(x, -1);  // degree n holds X^{n+1}
  if (xs.empty() && y.empty()) return Complex::zero(x.algebra());
  const auto [lo, hi] = joint_range(y, xs);
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(direct_sum(y.term(n), x.term(n + 1)));
    if (n == hi) break;
    const std::size_t y0 = y.dim(n), y1 = y.dim(n + 1), x1 = x.dim(n + 1), x2 = x.dim(n + 2);
    Matrix d(y1 + x2, y0 + x1);
    d.set_block(0, 0, y.differential(n));
    d.set_block(0, y0, map_at(f, n + 1, y1, x1));
    Matrix dx = x.differential(n + 1);
    dx *= Rational(-1);
    d.set_block(y1, y0, dx);
    ds.push_back(std::move(d));
  }
  return Complex(x.algebra(), lo, std::move(terms), std::move(ds));
}

bool is_chain_map(const Complex& x, const Complex& y, const ChainMap& f) {
  const auto [lo, hi] = joint_range(x, y);
  for (int n = lo - 1; n <= hi; ++n) {
    const Matrix fn = map_at(f, n, y.dim(n), x.dim(n));
    const Matrix fn1 = map_at(f, n + 1, y.dim(n + 1), x.dim(n + 1));
    if (!(y.differential(n) * fn == fn1 * x.differential(n))) return false;
  }
  for (const auto& [n, m] : f)
    if (!is_homomorphism(x.term(n), y.term(n), m)) return false;
  return true;
}

}  // namespace ncmot
