#include <algorithm>
#include <map>
#include <stdexcept>

#include "ncmot/complex.hpp"
#include "ncmot/errors.hpp"

namespace ncmot {

bool RingMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.empty(); });
}

namespace ring {

Algebra::Element add(const Algebra::Element& a, const Algebra::Element& b) {
  Algebra::Element out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(b[j++]);
    } else {
      Rational c = a[i].coeff + b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].index, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Algebra::Element scale(const Algebra::Element& a, const Rational& s) {
  if (sgn(s) == 0) return {};
  Algebra::Element out = a;
  for (auto& t : out) t.coeff *= s;
  return out;
}

Algebra::Element multiply(const Algebra& r, const Algebra::Element& a, const Algebra::Element& b) {
  std::map<std::size_t, Rational> acc;
  for (const auto& x : a)
    for (const auto& y : b)
      for (const auto& t : r.product(x.index, y.index)) acc[t.index] += x.coeff * y.coeff * t.coeff;
  Algebra::Element out;
  for (auto& [i, c] : acc)
    if (sgn(c) != 0) out.push_back({i, std::move(c)});
  return out;
}

Algebra::Element from_vector(const Vector& v) {
  Algebra::Element out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back({i, v[i]});
  return out;
}

RingMatrix multiply(const Algebra& r, const RingMatrix& a, const RingMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("ring matrix sizes do not match");
  RingMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t k = 0; k < a.cols; ++k) {
        if (a(i, k).empty() || b(k, j).empty()) continue;
        out(i, j) = add(out(i, j), multiply(r, a(i, k), b(k, j)));
      }
  return out;
}

}  // namespace ring

namespace {

bool in_corner(const Algebra& r, const Algebra::Element& e, std::size_t s, std::size_t t) {
  return std::all_of(e.begin(), e.end(),
                     [&](const auto& term) { return r.left_idempotent(term.index) == s && r.right_idempotent(term.index) == t; });
}

}  // namespace

PerfectComplex::PerfectComplex(AlgebraPtr ring, int lo, std::vector<std::vector<std::size_t>> summands,
                               std::vector<RingMatrix> differentials)
    : ring_(std::move(ring)), lo_(lo), summands_(std::move(summands)), differentials_(std::move(differentials)) {
  if (!ring_) throw std::invalid_argument("perfect complex without ring");
  if (summands_.empty()) {
    differentials_.clear();
    return;
  }
  if (differentials_.size() + 1 != summands_.size())
    throw std::invalid_argument("perfect complex needs one differential between consecutive degrees");
  for (const auto& s : summands_)
    for (auto k : s)
      if (k >= ring_->idempotent_count()) throw std::invalid_argument("summand idempotent out of range");
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const auto& d = differentials_[i];
    const auto& src = summands_[i];
    const auto& dst = summands_[i + 1];
    if (d.rows != dst.size() || d.cols != src.size()) throw std::invalid_argument("ring matrix has wrong size");
    for (std::size_t l = 0; l < d.rows; ++l)
      for (std::size_t k = 0; k < d.cols; ++k)
        if (!in_corner(*ring_, d(l, k), dst[l], src[k]))
          throw std::invalid_argument("differential entry outside e_target R e_source");
  }
}

PerfectComplex PerfectComplex::zero(AlgebraPtr ring) { return PerfectComplex(std::move(ring), 0, {}, {}); }

PerfectComplex PerfectComplex::projective(AlgebraPtr ring, std::size_t k, int degree) {
  return PerfectComplex(std::move(ring), degree, {{k}}, {});
}

const std::vector<std::size_t>& PerfectComplex::summands(int n) const {
  static const std::vector<std::size_t> none;
  if (n < lo_ || n > hi()) return none;
  return summands_[static_cast<std::size_t>(n - lo_)];
}

std::vector<std::size_t> PerfectComplex::multiplicities(int n) const {
  std::vector<std::size_t> out(ring_->idempotent_count(), 0);
  for (auto k : summands(n)) ++out[k];
  return out;
}

RingMatrix PerfectComplex::differential(int n) const {
  if (n >= lo_ && n < hi()) return differentials_[static_cast<std::size_t>(n - lo_)];
  return RingMatrix(summands(n + 1).size(), summands(n).size());
}

std::size_t PerfectComplex::rank() const {
  std::size_t total = 0;
  for (const auto& s : summands_) total += s.size();
  return total;
}

bool PerfectComplex::is_complex() const {
  for (int n = lo_; n + 1 < hi(); ++n)
    if (!ring::multiply(*ring_, differential(n + 1), differential(n)).is_zero()) return false;
  return true;
}

PerfectComplex PerfectComplex::trimmed() const {
  int first = lo_, last = hi();
  while (first <= last && summands(first).empty()) ++first;
  while (last >= first && summands(last).empty()) --last;
  if (first > last) return zero(ring_);
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> d;
  for (int n = first; n <= last; ++n) {
    s.push_back(summands(n));
    if (n < last) d.push_back(differential(n));
  }
  return PerfectComplex(ring_, first, std::move(s), std::move(d));
}

PerfectComplex PerfectComplex::rebased(AlgebraPtr ring) const {
  if (!same_algebra(ring, ring_)) throw AlgebraMismatch("rebasing onto a different ring");
  PerfectComplex out = *this;
  out.ring_ = std::move(ring);
  return out;
}

Module projective_sum(const AlgebraPtr& r, const std::vector<std::size_t>& summands) {
  std::vector<Module> parts;
  for (auto s : summands) parts.push_back(projective_module(r, s));
  return direct_sum(parts, r);
}

Matrix explicit_map(const Algebra& r, const std::vector<std::size_t>& source, const std::vector<std::size_t>& target,
                    const RingMatrix& m) {
  std::vector<std::vector<std::size_t>> basis(r.idempotent_count());
  std::vector<std::size_t> position(r.dim());
  for (std::size_t k = 0; k < r.idempotent_count(); ++k) {
    basis[k] = projective_basis(r, k);
    for (std::size_t i = 0; i < basis[k].size(); ++i) position[basis[k][i]] = i;
  }
  std::vector<std::size_t> src_off{0}, dst_off{0};
  for (auto s : source) src_off.push_back(src_off.back() + basis[s].size());
  for (auto t : target) dst_off.push_back(dst_off.back() + basis[t].size());
  Matrix out(dst_off.back(), src_off.back());
  for (std::size_t k = 0; k < source.size(); ++k)
    for (std::size_t l = 0; l < target.size(); ++l) {
      const auto& e = m(l, k);
      if (e.empty()) continue;
      for (std::size_t i = 0; i < basis[source[k]].size(); ++i) {
        const std::size_t b = basis[source[k]][i];
        for (const auto& x : e)
          for (const auto& t : r.product(x.index, b)) out(dst_off[l] + position[t.index], src_off[k] + i) += x.coeff * t.coeff;
      }
    }
  return out;
}

Complex PerfectComplex::to_complex() const {
  if (empty()) return Complex::zero(ring_);
  std::vector<Module> terms;
  std::vector<Matrix> ds;
  for (int n = lo_; n <= hi(); ++n) {
    terms.push_back(projective_sum(ring_, summands(n)));
    if (n < hi()) ds.push_back(explicit_map(*ring_, summands(n), summands(n + 1), differential(n)));
  }
  return Complex(ring_, lo_, std::move(terms), std::move(ds));
}

PerfectComplex shift(const PerfectComplex& p, int k) {
  if (p.empty()) return p;
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> d;
  for (int n = p.lo(); n <= p.hi(); ++n) {
    s.push_back(p.summands(n));
    if (n == p.hi()) break;
    RingMatrix m = p.differential(n);
    if (k % 2 != 0)
      for (auto& e : m.entries) e = ring::scale(e, Rational(-1));
    d.push_back(std::move(m));
  }
  return PerfectComplex(p.ring(), p.lo() + k, std::move(s), std::move(d));
}

namespace {

void set_block(RingMatrix& dst, std::size_t r, std::size_t c, const RingMatrix& src, const Rational& s = 1) {
  for (std::size_t i = 0; i < src.rows; ++i)
    for (std::size_t j = 0; j < src.cols; ++j) dst(r + i, c + j) = ring::scale(src(i, j), s);
}

std::pair<int, int> joint_range(const PerfectComplex& a, const PerfectComplex& b) {
  if (a.empty()) return {b.lo(), b.hi()};
  if (b.empty()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

RingMatrix map_at(const PerfectMap& f, int n, std::size_t rows, std::size_t cols) {
  auto it = f.find(n);
  if (it == f.end()) return RingMatrix(rows, cols);
  if (it->second.rows != rows || it->second.cols != cols) throw std::invalid_argument("chain map component has wrong size");
  return it->second;
}

}  // namespace

PerfectComplex direct_sum(const PerfectComplex& a, const PerfectComplex& b) {
  if (!same_algebra(a.ring(), b.ring())) throw AlgebraMismatch("direct sum of perfect complexes over different rings");
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto [lo, hi] = joint_range(a, b);
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    s.push_back(concat(a.summands(n), b.summands(n)));
    if (n == hi) break;
    const auto da = a.differential(n), db = b.differential(n);
    RingMatrix m(da.rows + db.rows, da.cols + db.cols);
    set_block(m, 0, 0, da);
    set_block(m, da.rows, da.cols, db);
    d.push_back(std::move(m));
  }
  return PerfectComplex(a.ring(), lo, std::move(s), std::move(d));
}

PerfectComplex cone(const PerfectComplex& x, const PerfectComplex& y, const PerfectMap& f) {
  if (!same_algebra(x.ring(), y.ring())) throw AlgebraMismatch("cone of a map between different rings");
  const PerfectComplex xs = shift(x, -1);  // degree n holds X^{n+1}
  if (xs.empty() && y.empty()) return PerfectComplex::zero(x.ring());
  const auto [lo, hi] = joint_range(y, xs);
  std::vector<std::vector<std::size_t>> s;
  std::vector<RingMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    s.push_back(concat(y.summands(n), x.summands(n + 1)));
    if (n == hi) break;
    const auto dy = y.differential(n), dx = x.differential(n + 1);
    RingMatrix m(dy.rows + dx.rows, dy.cols + dx.cols);
    set_block(m, 0, 0, dy);
    set_block(m, 0, dy.cols, map_at(f, n + 1, dy.rows, dx.cols));
    set_block(m, dy.rows, dy.cols, dx, Rational(-1));
    d.push_back(std::move(m));
  }
  return PerfectComplex(x.ring(), lo, std::move(s), std::move(d));
}

bool is_chain_map(const PerfectComplex& x, const PerfectComplex& y, const PerfectMap& f) {
  const Algebra& r = *x.ring();
  for (const auto& [n, m] : f) {
    const auto& src = x.summands(n);
    const auto& dst = y.summands(n);
    if (m.rows != dst.size() || m.cols != src.size()) return false;
    for (std::size_t l = 0; l < m.rows; ++l)
      for (std::size_t k = 0; k < m.cols; ++k)
        if (!in_corner(r, m(l, k), dst[l], src[k])) return false;
  }
  const auto [lo, hi] = joint_range(x, y);
  for (int n = lo - 1; n <= hi; ++n) {
    const auto fn = map_at(f, n, y.summands(n).size(), x.summands(n).size());
    const auto fn1 = map_at(f, n + 1, y.summands(n + 1).size(), x.summands(n + 1).size());
    const auto lhs = ring::multiply(r, y.differential(n), fn);
    const auto rhs = ring::multiply(r, fn1, x.differential(n));
    for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
      const auto diff = ring::add(lhs.entries[i], ring::scale(rhs.entries[i], Rational(-1)));
      if (!diff.empty()) return false;
    }
  }
  return true;
}

}  // namespace ncmot
