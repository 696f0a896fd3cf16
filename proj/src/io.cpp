#include "ncmot/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ncmot/errors.hpp"

namespace ncmot {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw MalformedInput(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw MalformedInput(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::map<std::string, std::size_t> label_index(const Algebra& a) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.emplace(a.label(i), i);
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& idx, const std::string& label) {
  auto it = idx.find(label);
  if (it == idx.end()) throw MalformedInput("unknown basis label '" + label + "'");
  return it->second;
}

Algebra::Element element_from_json(const Json& j, const std::map<std::string, std::size_t>& idx) {
  if (!j.is_object()) throw MalformedInput("algebra element must be an object {label: coefficient}");
  Algebra::Element e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Rational c = rational_from_json(it.value());
    if (sgn(c) != 0) e.push_back({lookup(idx, it.key()), std::move(c)});
  }
  std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
  return e;
}

Json element_to_json(const Algebra& a, const Algebra::Element& e) {
  Json out = Json::object();
  for (const auto& t : e) out[a.label(t.index)] = rational_to_json(t.coeff);
  return out;
}

AlgebraPtr structure_from_json(const Json& j) {
  Algebra::Spec spec;
  spec.name = j.contains("name") ? as_string(j.at("name"), "name") : "algebra";
  const Json& labels = field(j, "labels");
  if (!labels.is_array() || labels.empty()) throw MalformedInput("labels must be a nonempty array");
  for (const auto& l : labels) spec.labels.push_back(as_string(l, "label"));
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < spec.labels.size(); ++i)
    if (!idx.emplace(spec.labels[i], i).second) throw MalformedInput("duplicate label '" + spec.labels[i] + "'");
  for (const auto& l : field(j, "idempotents")) spec.idempotents.push_back(lookup(idx, as_string(l, "idempotent")));
  const std::size_t n = spec.labels.size();
  spec.products.assign(n, std::vector<Algebra::Element>(n));
  const Json& products = field(j, "products");
  if (!products.is_array()) throw MalformedInput("products must be an array");
  for (const auto& p : products) {
    const std::size_t l = lookup(idx, as_string(field(p, "left"), "left"));
    const std::size_t r = lookup(idx, as_string(field(p, "right"), "right"));
    spec.products[l][r] = element_from_json(field(p, "result"), idx);
  }
  auto generators = [&](const char* key, std::vector<std::size_t>& out) {
    if (!j.contains(key)) return;
    for (const auto& l : j.at(key)) out.push_back(lookup(idx, as_string(l, key)));
    std::sort(out.begin(), out.end());
  };
  generators("radical_generators", spec.radical_generators);
  generators("radical_right_generators", spec.radical_right_generators);
  return Algebra::create(std::move(spec));
}

// Fills in actions of basis elements that are scalar multiples of products
// of known ones.
void complete_actions(const Algebra& a, std::vector<std::optional<SparseMatrix>>& act) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!act[i]) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (!act[j]) continue;
        const auto& p = a.product(i, j);
        if (p.size() != 1 || act[p[0].index]) continue;
        SparseMatrix m = *act[j] * *act[i];
        m.scale(1 / p[0].coeff);
        act[p[0].index] = std::move(m);
        progress = true;
      }
    }
  }
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw MalformedInput("malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw MalformedInput("rational must be an integer or a \"p/q\" string");
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw MalformedInput("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"from", a.source}, {"to", a.target}, {"label", a.label}});
  return {{"vertices", q.vertex_count}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  Quiver q;
  q.vertex_count = as_size(field(j, "vertices"), "vertices");
  if (j.contains("arrows")) {
    const Json& arrows = j.at("arrows");
    if (!arrows.is_array()) throw MalformedInput("arrows must be an array");
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const Json& a = arrows[k];
      std::string label = a.contains("label") ? as_string(a.at("label"), "label") : "a" + std::to_string(k);
      q.arrows.push_back({as_size(field(a, "from"), "from"), as_size(field(a, "to"), "to"), std::move(label)});
    }
  }
  q.validate(true);
  return q;
}

AlgebraInput algebra_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("corpus:", 0) != 0) throw MalformedInput("algebra string must be \"corpus:<name>\"");
    return algebra_from_json(Json{{"corpus", s.substr(7)}});
  }
  if (!j.is_object()) throw MalformedInput("algebra must be an object or a \"corpus:<name>\" string");
  if (j.contains("corpus")) {
    const std::string name = as_string(j.at("corpus"), "corpus");
    try {
      const auto& c = corpus_algebra(name);
      return {c.algebra, c.quiver};
    } catch (const std::out_of_range&) {
      throw MalformedInput("unknown corpus algebra '" + name + "'");
    }
  }
  if (j.contains("vertices")) {
    Quiver q = quiver_from_json(j);
    const std::string name = j.contains("name") ? as_string(j.at("name"), "name") : "path";
    return {path_algebra(q, name), q};
  }
  if (j.contains("quiver")) {
    Quiver q = quiver_from_json(j.at("quiver"));
    const std::string name = j.contains("name") ? as_string(j.at("name"), "name") : "path";
    return {path_algebra(q, name), q};
  }
  if (j.contains("structure")) return {structure_from_json(j.at("structure")), std::nullopt};
  if (j.contains("tensor")) {
    const Json& t = j.at("tensor");
    if (!t.is_array() || t.size() != 2) throw MalformedInput("tensor needs exactly two factors");
    return {tensor(algebra_from_json(t[0]).algebra, algebra_from_json(t[1]).algebra), std::nullopt};
  }
  throw MalformedInput("algebra needs one of: corpus, vertices, quiver, structure, tensor");
}

Json algebra_to_json(const Algebra& a) {
  Json idem = Json::array();
  for (std::size_t k = 0; k < a.idempotent_count(); ++k) idem.push_back(a.label(a.idempotent(k)));
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!a.product(i, k).empty())
        products.push_back({{"left", a.label(i)}, {"right", a.label(k)}, {"result", element_to_json(a, a.product(i, k))}});
  Json gens = Json::array(), rgens = Json::array();
  for (auto g : a.radical_generators()) gens.push_back(a.label(g));
  for (auto g : a.radical_right_generators()) rgens.push_back(a.label(g));
  return {{"structure",
           {{"name", a.name()},
            {"labels", a.labels()},
            {"idempotents", idem},
            {"products", products},
            {"radical_generators", gens},
            {"radical_right_generators", rgens}}}};
}

namespace {

std::vector<SparseMatrix> side_actions(const Algebra& a, const Json& given, std::size_t dim, const char* side) {
  if (!given.is_object()) throw MalformedInput(std::string(side) + " must be an object {label: matrix}");
  const auto idx = label_index(a);
  std::vector<std::optional<SparseMatrix>> act(a.dim());
  for (auto it = given.begin(); it != given.end(); ++it) {
    const Matrix m = matrix_from_json(it.value());
    if (dim > 0 && (m.rows() != dim || m.cols() != dim))
      throw MalformedInput(std::string(side) + " action of '" + it.key() + "' must be dim x dim");
    act[lookup(idx, it.key())] = dim == 0 ? SparseMatrix(0, 0) : SparseMatrix::from_dense(m);
  }
  complete_actions(a, act);
  std::vector<SparseMatrix> out;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    if (!act[b]) throw MalformedInput(std::string(side) + " action of '" + a.label(b) + "' is missing");
    out.push_back(std::move(*act[b]));
  }
  return out;
}

}  // namespace

Module module_from_json(const Json& j, const AlgebraInput& over) {
  const Algebra& a = *over.algebra;
  if (j.contains("left") || j.contains("right")) {
    const auto& f = a.factors();
    if (!f) throw MalformedInput("left/right form needs a bimodule algebra");
    const std::size_t dim = as_size(field(j, "dim"), "dim");
    // a x b with a acting through the opposite factor.
    const auto left = side_actions(*f->first, field(j, "left"), dim, "left");
    const auto right = side_actions(*f->second, field(j, "right"), dim, "right");
    std::vector<SparseMatrix> actions;
    for (std::size_t i = 0; i < f->first->dim(); ++i)
      for (std::size_t k = 0; k < f->second->dim(); ++k) actions.push_back(left[i] * right[k]);
    Module m(over.algebra, dim, std::move(actions));
    if (!m.satisfies_axioms()) throw MalformedInput("left and right actions do not form a bimodule");
    return m;
  }
  std::vector<std::optional<SparseMatrix>> act(a.dim());
  std::size_t dim = 0;
  if (j.contains("representation")) {
    if (!over.quiver) throw MalformedInput("representation form needs a quiver algebra");
    const Quiver& q = *over.quiver;
    const Json& rep = j.at("representation");
    const Json& dims_json = field(rep, "dims");
    if (!dims_json.is_array() || dims_json.size() != q.vertex_count)
      throw MalformedInput("representation dims must list one entry per vertex");
    std::vector<std::size_t> dims, offset;
    for (const auto& d : dims_json) {
      offset.push_back(dim);
      dims.push_back(as_size(d, "dims entry"));
      dim += dims.back();
    }
    const auto idx = label_index(a);
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      SparseMatrix e(dim, dim);
      for (std::size_t k = 0; k < dims[v]; ++k) e.add(offset[v] + k, offset[v] + k, Rational(1));
      act[a.idempotent(v)] = std::move(e);
    }
    const Json arrows = rep.contains("arrows") ? rep.at("arrows") : Json::object();
    for (const auto& arrow : q.arrows) {
      SparseMatrix m(dim, dim);
      if (arrows.contains(arrow.label)) {
        const Matrix block = matrix_from_json(arrows.at(arrow.label));
        if (block.rows() != dims[arrow.target] || block.cols() != dims[arrow.source])
          if (!(block.rows() == 0 && (dims[arrow.target] == 0 || dims[arrow.source] == 0)))
            throw MalformedInput("arrow '" + arrow.label + "' matrix must be dims[to] x dims[from]");
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c)
            if (sgn(block(r, c)) != 0) m.add(offset[arrow.target] + r, offset[arrow.source] + c, block(r, c));
      }
      act[lookup(idx, arrow.label)] = std::move(m);
    }
    for (auto it = arrows.begin(); it != arrows.end(); ++it) lookup(idx, it.key());
  } else {
    dim = as_size(field(j, "dim"), "dim");
    const Json& action = field(j, "action");
    if (!action.is_object()) throw MalformedInput("action must be an object {label: matrix}");
    const auto idx = label_index(a);
    for (auto it = action.begin(); it != action.end(); ++it) {
      const Matrix m = matrix_from_json(it.value());
      if (dim > 0 && (m.rows() != dim || m.cols() != dim))
        throw MalformedInput("action of '" + it.key() + "' must be dim x dim");
      act[lookup(idx, it.key())] = dim == 0 ? SparseMatrix(0, 0) : SparseMatrix::from_dense(m);
    }
  }
  complete_actions(a, act);
  std::vector<SparseMatrix> actions;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    if (!act[b]) throw MalformedInput("action of '" + a.label(b) + "' is missing and not a product of given ones");
    actions.push_back(std::move(*act[b]));
  }
  Module m(over.algebra, dim, std::move(actions));
  if (!m.satisfies_axioms()) throw MalformedInput("action matrices do not satisfy the module axioms");
  return m;
}

Json module_to_json(const Module& m) {
  const Algebra& a = *m.algebra();
  Json action = Json::object();
  for (std::size_t b = 0; b < a.dim(); ++b) action[a.label(b)] = matrix_to_json(m.action(b).to_dense());
  return {{"dim", m.dim()}, {"action", action}};
}

Complex complex_from_json(const Json& j, const AlgebraInput& over) {
  if (!j.contains("terms")) return Complex::concentrated(module_from_json(j, over), 0);
  const int lo = j.contains("lo") ? as_int(j.at("lo"), "lo") : 0;
  const Json& terms_json = j.at("terms");
  if (!terms_json.is_array()) throw MalformedInput("terms must be an array");
  std::vector<Module> terms;
  for (const auto& t : terms_json) terms.push_back(module_from_json(t, over));
  std::vector<Matrix> ds;
  if (j.contains("differentials")) {
    for (const auto& d : j.at("differentials")) ds.push_back(matrix_from_json(d));
  }
  if (terms.size() > 0 && ds.size() != terms.size() - 1)
    throw MalformedInput("a complex with k terms needs k - 1 differentials");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i].rows() == 0 && ds[i].cols() == 0) ds[i] = Matrix(terms[i + 1].dim(), terms[i].dim());
    if (ds[i].rows() != terms[i + 1].dim() || ds[i].cols() != terms[i].dim())
      throw MalformedInput("differential " + std::to_string(i) + " has the wrong shape");
  }
  Complex c(over.algebra, lo, std::move(terms), std::move(ds));
  if (!c.verify()) throw MalformedInput("differentials do not form a complex of module homomorphisms");
  return c;
}

Json complex_to_json(const Complex& c) {
  Json terms = Json::array(), ds = Json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    terms.push_back(module_to_json(c.term(n)));
    if (n < c.hi()) ds.push_back(matrix_to_json(c.differential(n)));
  }
  return {{"lo", c.lo()}, {"terms", terms}, {"differentials", ds}};
}

Json perfect_to_json(const PerfectComplex& p) {
  const Algebra& r = *p.ring();
  Json summands = Json::array(), ds = Json::array();
  for (int n = p.lo(); n <= p.hi(); ++n) {
    Json s = Json::array();
    for (auto k : p.summands(n)) s.push_back(r.label(r.idempotent(k)));
    summands.push_back(std::move(s));
    if (n < p.hi()) {
      const RingMatrix d = p.differential(n);
      Json rows = Json::array();
      for (std::size_t i = 0; i < d.rows; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < d.cols; ++k) row.push_back(element_to_json(r, d(i, k)));
        rows.push_back(std::move(row));
      }
      ds.push_back(std::move(rows));
    }
  }
  return {{"lo", p.lo()}, {"summands", summands}, {"differentials", ds}};
}

Json dims_to_json(const GradedDims& d) { return {{"lo", d.lo}, {"dims", d.dims}}; }

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("scenario must be an object");
  if (!j.contains("format") || !j.at("format").is_number_integer() || j.at("format").get<int>() != kFormatVersion)
    throw MalformedInput("scenario needs \"format\": 1");
  Scenario s;
  s.name = j.contains("name") ? as_string(j.at("name"), "name") : "scenario";
  auto motive = [](const Json& m) {
    ScenarioMotive out;
    out.algebra = field(m, "algebra");
    if (m.contains("idempotent")) out.idempotent = as_string(m.at("idempotent"), "idempotent");
    return out;
  };
  s.source = motive(field(j, "source"));
  s.target = j.contains("target") ? motive(j.at("target")) : s.source;
  if (j.contains("options")) {
    const Json& o = j.at("options");
    if (!o.is_object()) throw MalformedInput("options must be an object");
    if (o.contains("cap")) s.options.cap = as_int(o.at("cap"), "cap");
    if (o.contains("bar_depth")) s.options.bar_depth = as_int(o.at("bar_depth"), "bar_depth");
    if (o.contains("seed")) {
      if (!o.at("seed").is_number_unsigned()) throw MalformedInput("seed must be a nonnegative integer");
      s.options.seed = o.at("seed").get<std::uint64_t>();
    }
    if (o.contains("samples")) s.options.samples = as_int(o.at("samples"), "samples");
  }
  if (s.options.cap <= 0) throw MalformedInput("cap must be positive");
  if (s.options.bar_depth < 0) throw MalformedInput("bar_depth must be nonnegative");
  if (s.options.samples < 0) throw MalformedInput("samples must be nonnegative");
  return s;
}

Json scenario_to_json(const Scenario& s) {
  auto motive = [](const ScenarioMotive& m) { return Json{{"algebra", m.algebra}, {"idempotent", m.idempotent}}; };
  return {{"format", kFormatVersion},
          {"name", s.name},
          {"source", motive(s.source)},
          {"target", motive(s.target)},
          {"options",
           {{"cap", s.options.cap},
            {"bar_depth", s.options.bar_depth},
            {"seed", s.options.seed},
            {"samples", s.options.samples}}}};
}

std::string fnv_digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json check_to_json(const CheckRecord& c) {
  return {{"name", c.name},     {"anchor", c.anchor}, {"inputs", c.inputs}, {"inputs_digest", fnv_digest(c.inputs)},
          {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace ncmot
