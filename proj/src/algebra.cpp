#include "ncmot/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"

namespace ncmot {

// ---------------------------------------------------------------------------
// Quiver

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indegree(vertex_count, 0);
  for (const auto& a : arrows) ++indegree[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == vertex_count;
}

void Quiver::validate(bool require_acyclic) const {
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    if (a.source >= vertex_count || a.target >= vertex_count)
      throw UnsupportedInput("arrow '" + a.label + "' has an endpoint out of range");
    if (a.label.empty()) throw UnsupportedInput("arrow labels must be nonempty");
    if (!labels.insert(a.label).second) throw UnsupportedInput("duplicate arrow label '" + a.label + "'");
  }
  if (require_acyclic && !is_acyclic()) throw UnsupportedInput("quiver has an oriented cycle");
}

std::size_t count_paths(const Quiver& q) {
  std::function<std::size_t(std::size_t)> from = [&](std::size_t v) -> std::size_t {
    std::size_t total = 1;
    for (const auto& a : q.arrows)
      if (a.source == v) total += from(a.target);
    return total;
  };
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertex_count; ++v) total += from(v);
  return total;
}

// ---------------------------------------------------------------------------
// Algebra

namespace {

std::uint64_t fnv(std::uint64_t h, std::uint64_t x) {
  for (int k = 0; k < 8; ++k) {
    h ^= (x >> (8 * k)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool element_is_basis(const Algebra::Element& e, std::size_t b) {
  return e.size() == 1 && e[0].index == b && e[0].coeff == 1;
}

Algebra::Element normalize(Algebra::Element e) {
  std::map<std::size_t, Rational> acc;
  for (auto& t : e) acc[t.index] += t.coeff;
  Algebra::Element out;
  for (auto& [i, c] : acc)
    if (sgn(c) != 0) out.push_back({i, c});
  return out;
}

}  // namespace

AlgebraPtr Algebra::create(Spec spec) { return finish(std::move(spec), std::nullopt, true); }

AlgebraPtr Algebra::finish(Spec spec, std::optional<std::pair<AlgebraPtr, AlgebraPtr>> factors, bool validate) {
  const std::size_t n = spec.labels.size();
  if (n == 0) throw UnsupportedInput("algebra must have positive dimension");
  if (spec.products.size() != n) throw UnsupportedInput("product table has wrong number of rows");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->name_ = std::move(spec.name);
  alg->labels_ = std::move(spec.labels);
  alg->idempotents_ = std::move(spec.idempotents);
  alg->products_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.products[i].size() != n) throw UnsupportedInput("product table has wrong number of columns");
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : spec.products[i][j])
        if (t.index >= n) throw UnsupportedInput("product term index out of range");
      alg->products_.push_back(normalize(std::move(spec.products[i][j])));
    }
  }
  const std::size_t m = alg->idempotents_.size();
  if (m == 0) throw UnsupportedInput("algebra needs at least one idempotent");
  std::vector<long> idem_of(n, -1);
  for (std::size_t k = 0; k < m; ++k) {
    if (alg->idempotents_[k] >= n) throw UnsupportedInput("idempotent index out of range");
    idem_of[alg->idempotents_[k]] = static_cast<long>(k);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      const auto& p = alg->product(alg->idempotents_[k], alg->idempotents_[l]);
      const bool ok = k == l ? element_is_basis(p, alg->idempotents_[k]) : p.empty();
      if (!ok) throw UnsupportedInput("idempotents are not orthogonal idempotents");
    }
  alg->left_.assign(n, 0);
  alg->right_.assign(n, 0);
  alg->radical_.assign(n, true);
  for (std::size_t b = 0; b < n; ++b) {
    long left = -1, right = -1;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& lp = alg->product(alg->idempotents_[k], b);
      if (element_is_basis(lp, b)) {
        if (left >= 0) throw UnsupportedInput("basis is not adapted to the idempotents");
        left = static_cast<long>(k);
      } else if (!lp.empty()) {
        throw UnsupportedInput("basis is not adapted to the idempotents");
      }
      const auto& rp = alg->product(b, alg->idempotents_[k]);
      if (element_is_basis(rp, b)) {
        if (right >= 0) throw UnsupportedInput("basis is not adapted to the idempotents");
        right = static_cast<long>(k);
      } else if (!rp.empty()) {
        throw UnsupportedInput("basis is not adapted to the idempotents");
      }
    }
    if (left < 0 || right < 0) throw UnsupportedInput("idempotents do not sum to the unit");
    alg->left_[b] = static_cast<std::size_t>(left);
    alg->right_[b] = static_cast<std::size_t>(right);
    if (idem_of[b] >= 0) alg->radical_[b] = false;
  }
  auto all_radical = [&] {
    std::vector<std::size_t> r;
    for (std::size_t b = 0; b < n; ++b)
      if (alg->radical_[b]) r.push_back(b);
    return r;
  };
  alg->radical_generators_ = spec.radical_generators.empty() ? all_radical() : std::move(spec.radical_generators);
  alg->radical_right_generators_ =
      spec.radical_right_generators.empty() ? all_radical() : std::move(spec.radical_right_generators);

  alg->cartan_.assign(m * m, 0);
  for (std::size_t b = 0; b < n; ++b) ++alg->cartan_[alg->left_[b] * m + alg->right_[b]];

  if (validate) {
    // The radical must be a nilpotent two-sided ideal: products involving a
    // radical element expand in radical elements, and long products vanish.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!alg->radical_[i] && !alg->radical_[j]) continue;
        for (const auto& t : alg->product(i, j))
          if (!alg->radical_[t.index]) throw UnsupportedInput("radical span is not an ideal");
      }
    std::vector<Vector> layer;
    for (std::size_t b = 0; b < n; ++b)
      if (alg->radical_[b]) layer.push_back(alg->basis_vector(b));
    std::size_t steps = 0;
    while (!layer.empty()) {
      if (++steps > n + 1) throw UnsupportedInput("radical is not nilpotent");
      SubspaceBuilder next(n);
      std::vector<Vector> next_layer;
      for (const auto& v : layer)
        for (std::size_t b = 0; b < n; ++b) {
          if (!alg->radical_[b]) continue;
          auto w = alg->multiply(v, alg->basis_vector(b));
          if (next.add(w)) next_layer.push_back(std::move(w));
        }
      layer = std::move(next_layer);
    }
    if (!alg->is_associative()) throw UnsupportedInput("multiplication is not associative");
  }

  std::uint64_t h = 1469598103934665603ULL;
  h = fnv(h, n);
  for (auto e : alg->idempotents_) h = fnv(h, e);
  for (std::size_t k = 0; k < alg->products_.size(); ++k) {
    for (const auto& t : alg->products_[k]) {
      h = fnv(h, k);
      h = fnv(h, t.index);
      h = fnv(h, t.coeff.get_str());
    }
  }
  alg->fingerprint_ = h;
  alg->factors_ = std::move(factors);
  return alg;
}

AlgebraPtr Algebra::field() {
  static const AlgebraPtr k = [] {
    Spec spec;
    spec.name = "Q";
    spec.labels = {"1"};
    spec.idempotents = {0};
    spec.products = {{Element{{0, Rational(1)}}}};
    return finish(std::move(spec), std::nullopt, true);
  }();
  return k;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& t : product(i, j)) out[t.index] += x[i] * y[j] * t.coeff;
    }
  }
  return out;
}

Vector Algebra::unit() const {
  Vector u(dim());
  for (auto e : idempotents_) u[e] = 1;
  return u;
}

Vector Algebra::idempotent_vector(std::size_t k) const { return basis_vector(idempotents_[k]); }

Vector Algebra::basis_vector(std::size_t b) const {
  Vector v(dim());
  v[b] = 1;
  return v;
}

bool Algebra::same_structure(const Algebra& other) const {
  if (this == &other) return true;
  return fingerprint_ == other.fingerprint_ && dim() == other.dim() && idempotents_ == other.idempotents_ &&
         std::equal(products_.begin(), products_.end(), other.products_.begin(),
                    [](const Element& a, const Element& b) {
                      if (a.size() != b.size()) return false;
                      for (std::size_t k = 0; k < a.size(); ++k)
                        if (a[k].index != b[k].index || a[k].coeff != b[k].coeff) return false;
                      return true;
                    });
}

bool Algebra::is_associative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::map<std::size_t, Rational> lhs, rhs;
        for (const auto& t : ij)
          for (const auto& u : product(t.index, k)) lhs[u.index] += t.coeff * u.coeff;
        for (const auto& t : product(j, k))
          for (const auto& u : product(i, t.index)) rhs[u.index] += t.coeff * u.coeff;
        std::erase_if(lhs, [](const auto& p) { return sgn(p.second) == 0; });
        std::erase_if(rhs, [](const auto& p) { return sgn(p.second) == 0; });
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

// ---------------------------------------------------------------------------
// Constructions

AlgebraPtr path_algebra(const Quiver& q, std::string name) {
  q.validate(true);
  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertex_count; ++v) paths.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    frontier.push_back({q.arrows[a].source, q.arrows[a].target, {a}});
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != p.target) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrows[a].target;
        next.push_back(std::move(ext));
      }
    }
    for (auto& p : frontier) paths.push_back(std::move(p));
    frontier = std::move(next);
  }

  const bool short_labels =
      std::all_of(q.arrows.begin(), q.arrows.end(), [](const Quiver::Arrow& a) { return a.label.size() == 1; });
  std::map<std::vector<std::size_t>, std::size_t> index_of_long;
  Algebra::Spec spec;
  spec.name = name.empty() ? "path" : std::move(name);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.arrows.empty()) {
      spec.labels.push_back("e" + std::to_string(p.source));
      spec.idempotents.push_back(i);
    } else {
      std::string label;
      for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k > 0 && !short_labels) label += '.';
        label += q.arrows[p.arrows[k]].label;
      }
      spec.labels.push_back(std::move(label));
      index_of_long[p.arrows] = i;
      if (p.arrows.size() == 1) {
        spec.radical_generators.push_back(i);
        spec.radical_right_generators.push_back(i);
      }
    }
  }
  const std::size_t n = paths.size();
  spec.products.assign(n, std::vector<Algebra::Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = paths[i];
      const auto& y = paths[j];
      if (x.target != y.source) continue;
      if (x.arrows.empty()) {
        spec.products[i][j] = {{j, Rational(1)}};
      } else if (y.arrows.empty()) {
        spec.products[i][j] = {{i, Rational(1)}};
      } else {
        auto seq = x.arrows;
        seq.insert(seq.end(), y.arrows.begin(), y.arrows.end());
        spec.products[i][j] = {{index_of_long.at(seq), Rational(1)}};
      }
    }
  return Algebra::create(std::move(spec));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  Algebra::Spec spec;
  const std::string& base = a->name();
  spec.name = base.size() > 3 && base.ends_with("^op") ? base.substr(0, base.size() - 3) : base + "^op";
  spec.labels = a->labels();
  spec.idempotents = a->idempotents_;
  spec.products.assign(n, std::vector<Algebra::Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) spec.products[i][j] = a->product(j, i);
  spec.radical_generators = a->radical_right_generators();
  spec.radical_right_generators = a->radical_generators();
  std::optional<std::pair<AlgebraPtr, AlgebraPtr>> factors;
  if (a->factors()) factors = std::make_pair(opposite(a->factors()->first), opposite(a->factors()->second));
  return Algebra::finish(std::move(spec), std::move(factors), false);
}

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t na = a->dim(), nb = b->dim();
  Algebra::Spec spec;
  spec.name = "(" + a->name() + " (x) " + b->name() + ")";
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) spec.labels.push_back(a->label(i) + "⊗" + b->label(j));
  for (std::size_t k = 0; k < a->idempotent_count(); ++k)
    for (std::size_t l = 0; l < b->idempotent_count(); ++l)
      spec.idempotents.push_back(a->idempotent(k) * nb + b->idempotent(l));
  const std::size_t n = na * nb;
  spec.products.assign(n, std::vector<Algebra::Element>(n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      const auto& pa = a->product(i, k);
      if (pa.empty()) continue;
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          const auto& pb = b->product(j, l);
          if (pb.empty()) continue;
          Algebra::Element e;
          for (const auto& ta : pa)
            for (const auto& tb : pb) e.push_back({ta.index * nb + tb.index, ta.coeff * tb.coeff});
          spec.products[i * nb + j][k * nb + l] = std::move(e);
        }
    }
  for (auto g : a->radical_generators())
    for (std::size_t l = 0; l < b->idempotent_count(); ++l) spec.radical_generators.push_back(g * nb + b->idempotent(l));
  for (std::size_t k = 0; k < a->idempotent_count(); ++k)
    for (auto g : b->radical_generators()) spec.radical_generators.push_back(a->idempotent(k) * nb + g);
  for (auto g : a->radical_right_generators())
    for (std::size_t l = 0; l < b->idempotent_count(); ++l)
      spec.radical_right_generators.push_back(g * nb + b->idempotent(l));
  for (std::size_t k = 0; k < a->idempotent_count(); ++k)
    for (auto g : b->radical_right_generators()) spec.radical_right_generators.push_back(a->idempotent(k) * nb + g);
  std::sort(spec.radical_generators.begin(), spec.radical_generators.end());
  std::sort(spec.radical_right_generators.begin(), spec.radical_right_generators.end());
  return Algebra::finish(std::move(spec), std::make_pair(a, b), false);
}

AlgebraPtr bimodule_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return tensor(opposite(a), b); }

AlgebraPtr enveloping(const AlgebraPtr& a) { return bimodule_algebra(a, a); }

}  // namespace ncmot
