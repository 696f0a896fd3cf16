#include "ncmot/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ncmot/errors.hpp"

namespace ncmot {

Quiver quiver_a2() { return {2, {{0, 1, "a"}}}; }
Quiver quiver_a3() { return {3, {{0, 1, "a"}, {1, 2, "b"}}}; }
Quiver quiver_kronecker() { return {2, {{0, 1, "a"}, {0, 1, "b"}}}; }
Quiver quiver_two_points() { return {2, {}}; }

const std::vector<CorpusAlgebra>& corpus_algebras() {
  static const std::vector<CorpusAlgebra> all = [] {
    std::vector<CorpusAlgebra> out;
    out.push_back({"Q", Algebra::field(), std::nullopt});
    out.push_back({"QxQ", path_algebra(quiver_two_points(), "QxQ"), quiver_two_points()});
    out.push_back({"A2", path_algebra(quiver_a2(), "A2"), quiver_a2()});
    out.push_back({"A3", path_algebra(quiver_a3(), "A3"), quiver_a3()});
    out.push_back({"Kronecker", path_algebra(quiver_kronecker(), "Kronecker"), quiver_kronecker()});
    out.push_back({"A2xA2", tensor(out[2].algebra, out[2].algebra), std::nullopt});
    out.push_back({"A2xKronecker", tensor(out[2].algebra, out[4].algebra), std::nullopt});
    return out;
  }();
  return all;
}

const CorpusAlgebra& corpus_algebra(std::string_view name) {
  for (const auto& c : corpus_algebras())
    if (c.name == name) return c;
  throw std::out_of_range("unknown corpus algebra '" + std::string(name) + "'");
}

Module dual_bimodule_module(const AlgebraPtr& a, const AlgebraPtr& env) {
  const std::size_t n = a->dim();
  if (env->dim() != n * n) throw AlgebraMismatch("enveloping algebra has the wrong dimension");
  // f_x . (b_i (x) b_j) evaluated at y is the coefficient of x in b_j y b_i.
  std::vector<SparseMatrix> act(env->dim(), SparseMatrix(n, n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : a->product(j, y))
        for (std::size_t i = 0; i < n; ++i)
          for (const auto& u : a->product(t.index, i)) act[i * n + j].add(y, u.index, t.coeff * u.coeff);
  return Module(env, n, std::move(act));
}

std::vector<NamedModule> corpus_bimodules(const AlgebraPtr& a, const AlgebraPtr& env) {
  std::vector<NamedModule> out;
  out.push_back({"diagonal", diagonal_bimodule(a, env)});
  out.push_back({"free", free_bimodule(a)});
  out.push_back({"dual", dual_bimodule_module(a, env)});
  const std::size_t m = a->idempotent_count();
  // Simple bimodules S(i, j) on the diagonal and, when present, one off it.
  for (std::size_t i = 0; i < std::min<std::size_t>(m, 2); ++i)
    out.push_back({"S(" + std::to_string(i) + "," + std::to_string(i) + ")", simple_module(env, i * m + i)});
  if (m > 1) out.push_back({"S(0,1)", simple_module(env, 1)});
  return out;
}

const std::vector<CorpusModel>& corpus_models() {
  static const std::vector<CorpusModel> all = [] {
    std::vector<CorpusModel> out = {
        {"A2 P0 -> A2", {"A2", "P0"}, {"A2", "id"}},
        {"A2 P1 -> A2 P0", {"A2", "P1"}, {"A2", "P0"}},
        {"A2 -> A2", {"A2", "id"}, {"A2", "id"}},
        {"A2 -> Kronecker", {"A2", "id"}, {"Kronecker", "id"}},
        {"A2 -> Q", {"A2", "id"}, {"Q", "id"}},
        {"A2 1-P0 -> A2 1-P1", {"A2", "1-P0"}, {"A2", "1-P1"}},
        {"A2 1-P0 -> Kronecker P1", {"A2", "1-P0"}, {"Kronecker", "P1"}},
        {"A2xA2 P0 -> A2xA2 P3", {"A2xA2", "P0"}, {"A2xA2", "P3"}},
        {"A2xKronecker P0 -> A2xKronecker P3", {"A2xKronecker", "P0"}, {"A2xKronecker", "P3"}},
        {"A3 P0 -> A3 P2", {"A3", "P0"}, {"A3", "P2"}},
        {"A3 -> A3", {"A3", "id"}, {"A3", "id"}},
        {"A3 -> Kronecker", {"A3", "id"}, {"Kronecker", "id"}},
        {"A3 1-P1 -> A3 1-P0", {"A3", "1-P1"}, {"A3", "1-P0"}},
        {"Kronecker P0 -> Kronecker P1", {"Kronecker", "P0"}, {"Kronecker", "P1"}},
        {"Kronecker -> A2", {"Kronecker", "id"}, {"A2", "id"}},
        {"Kronecker -> Kronecker", {"Kronecker", "id"}, {"Kronecker", "id"}},
        {"Kronecker 1-P0 -> Kronecker 1-P0", {"Kronecker", "1-P0"}, {"Kronecker", "1-P0"}},
        {"Q -> A2", {"Q", "id"}, {"A2", "id"}},
        {"Q -> Q", {"Q", "id"}, {"Q", "id"}},
        {"QxQ P0 -> QxQ P1", {"QxQ", "P0"}, {"QxQ", "P1"}},
        {"QxQ -> A3 1-P2", {"QxQ", "id"}, {"A3", "1-P2"}},
        {"QxQ -> QxQ", {"QxQ", "id"}, {"QxQ", "id"}},
    };
    std::sort(out.begin(), out.end(), [](const CorpusModel& x, const CorpusModel& y) { return x.name < y.name; });
    return out;
  }();
  return all;
}

namespace {

struct IdempotentTerm {
  int sign;
  std::optional<std::size_t> projector;  // empty for the identity
};

std::vector<IdempotentTerm> parse_terms(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw MalformedInput("empty idempotent spec");
  std::vector<IdempotentTerm> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      throw MalformedInput("idempotent spec '" + std::string(spec) + "': expected + or -");
    }
    if (s.compare(pos, 2, "id") == 0) {
      terms.push_back({sign, std::nullopt});
      pos += 2;
    } else if (pos < s.size() && s[pos] == '1') {
      terms.push_back({sign, std::nullopt});
      pos += 1;
    } else if (pos < s.size() && s[pos] == 'P') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw MalformedInput("idempotent spec '" + std::string(spec) + "': P needs an index");
      terms.push_back({sign, std::stoul(s.substr(start, pos - start))});
    } else {
      throw MalformedInput("idempotent spec '" + std::string(spec) + "': unexpected character");
    }
  }
  return terms;
}

}  // namespace

Correspondence parse_idempotent(Workspace& ws, const AlgebraPtr& a, std::string_view spec) {
  Correspondence out{a, a, {}};
  for (const auto& t : parse_terms(spec)) {
    if (t.projector && *t.projector >= a->idempotent_count())
      throw std::out_of_range("idempotent spec '" + std::string(spec) + "': P" + std::to_string(*t.projector) +
                              " out of range for " + a->name());
    Correspondence c = t.projector ? ws.projector(a, *t.projector) : ws.identity(a);
    out = add(out, scale(c, Rational(t.sign)));
  }
  return out;
}

NCMotive make_motive(Workspace& ws, const std::string& name, const AlgebraPtr& a, std::string_view spec) {
  const auto terms = parse_terms(spec);
  if (terms.size() == 1 && terms[0].sign == 1 && !terms[0].projector) return ws.motive(name, a);
  NCMotive m = ws.motive(name, a, parse_idempotent(ws, a, spec));
  if (!ws.is_idempotent(m)) throw UnsupportedInput("idempotent spec '" + std::string(spec) + "' is not idempotent");
  return m;
}

}  // namespace ncmot
