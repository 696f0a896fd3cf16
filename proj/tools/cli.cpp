#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ncmot/corpus.hpp"
#include "ncmot/derived.hpp"
#include "ncmot/errors.hpp"
#include "ncmot/hochschild.hpp"
#include "ncmot/io.hpp"
#include "ncmot/linalg.hpp"
#include "ncmot/motives.hpp"
#include "ncmot/random.hpp"

namespace ncmot::cli {

namespace {

struct Options {
  std::string out;
  std::uint64_t seed = 1;
  int cap = kDefaultResolutionCap;
  int bar_depth = 4;
  int samples = 10;
  bool timing = false;
  bool seed_set = false, cap_set = false, bar_depth_set = false, samples_set = false;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<CheckRecord> checks;
  Json results = Json::object();

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  }

  void add(std::string name, std::string anchor, std::string in, std::string expected, std::string actual, bool ok) {
    checks.push_back({std::move(name), std::move(anchor), std::move(in), std::move(expected), std::move(actual), ok});
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(check_to_json(c));
    return {{"format", kFormatVersion},
            {"command", command},
            {"inputs", inputs},
            {"inputs_digest", fnv_digest(inputs.dump())},
            {"checks", cs},
            {"results", results},
            {"pass", pass()},
            {"verdict", pass() ? "pass" : "fail"}};
  }
};

std::string matrix_text(const Matrix& m) { return matrix_to_json(m).dump(); }

Json load_input(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) return arg;
  return read_json_file(arg);
}

// An algebra argument: "corpus:<name>", or a file holding an algebra or
// {"algebra": ...}.
AlgebraInput load_algebra(const std::string& arg, Json& echo) {
  Json j = load_input(arg);
  if (j.is_object() && j.contains("algebra")) j = j.at("algebra");
  echo = j;
  return algebra_from_json(j);
}

Scenario load_scenario(const std::string& arg, const Options& o) {
  Scenario s = scenario_from_json(read_json_file(arg));
  if (o.cap_set) s.options.cap = o.cap;
  if (o.seed_set) s.options.seed = o.seed;
  if (o.bar_depth_set) s.options.bar_depth = o.bar_depth;
  if (o.samples_set) s.options.samples = o.samples;
  if (s.options.cap <= 0) throw MalformedInput("cap must be positive");
  return s;
}

std::string motive_name(const Json& algebra, const AlgebraPtr& a, const std::string& idem) {
  const std::string base = algebra.is_string() ? algebra.get<std::string>().substr(algebra.get<std::string>().find(':') + 1)
                                               : a->name();
  return idem == "id" ? base : base + " " + idem;
}

NCMotive load_motive(Workspace& ws, const ScenarioMotive& m) {
  const AlgebraInput in = algebra_from_json(m.algebra);
  try {
    return make_motive(ws, motive_name(m.algebra, in.algebra, m.idempotent), in.algebra, m.idempotent);
  } catch (const std::out_of_range& e) {
    throw MalformedInput(e.what());
  }
}

Json scenario_echo(const Scenario& s) { return scenario_to_json(s); }

// --- euler-matrix ----------------------------------------------------------

Matrix combinatorial_form(const Quiver& q) {
  Matrix m = Matrix::identity(q.vertex_count);
  for (const auto& a : q.arrows) m(a.source, a.target) -= 1;
  return m;
}

void euler_checks(Report& r, const std::string& name, const AlgebraInput& in, int cap) {
  const PairingMatrix e = euler_matrix(in.algebra, cap);
  const Rational det = determinant(e.values);
  r.add("euler_unimodular", "Euler form of a smooth proper algebra is unimodular", name, "det = +-1", to_string(det),
        det == 1 || det == -1);
  const bool kernels = same_span(kernel_left(e), kernel_right(e), e.size());
  r.add("euler_kernels_agree", "left and right kernels of the Euler form coincide", name, "equal spans",
        kernels ? "equal spans" : "different spans", kernels);
  if (in.quiver) {
    const Matrix comb = combinatorial_form(*in.quiver);
    r.add("euler_combinatorial", "chi(S_i, S_j) = delta_ij - #arrows i -> j", name, matrix_text(comb),
          matrix_text(e.values), comb == e.values);
  }
  r.results["euler_matrix"] = matrix_to_json(e.values);
  r.results["basis"] = e.basis;
  r.results["determinant"] = rational_to_json(det);
}

int euler_command(Report& r, const std::string& arg, const Options& o) {
  const AlgebraInput in = load_algebra(arg, r.inputs["algebra"]);
  euler_checks(r, in.algebra->name(), in, o.cap);
  return 0;
}

// --- serre-check -----------------------------------------------------------

void serre_pair_checks(const PerfectComplex& m, const PerfectComplex& n, int cap, bool& degreewise, bool& euler,
                       bool& third, Json& detail) {
  const PerfectComplex sm = serre(m, cap);
  const GradedDims lhs = homology_dims(hom_complex(m, n.to_complex()));
  const GradedDims rhs = homology_dims(hom_complex(n, sm.to_complex()));
  const int lo = std::min(lhs.lo, -(rhs.lo + static_cast<int>(rhs.dims.size())));
  const int hi = std::max(lhs.lo + static_cast<int>(lhs.dims.size()), -rhs.lo);
  degreewise = true;
  for (int i = lo; i <= hi; ++i)
    if (lhs[i] != rhs[-i]) degreewise = false;
  const long long chi = euler_pairing(m, n);
  euler = chi == euler_pairing(n, sm);
  third = euler_pairing(m, serre(n, cap)) == euler_pairing(n, m);
  detail = {{"hom_m_n", dims_to_json(lhs)}, {"hom_n_sm", dims_to_json(rhs)}, {"chi", chi}};
}

int serre_command(Report& r, const std::string& arg, const Options& o) {
  const AlgebraInput in = load_algebra(arg, r.inputs["algebra"]);
  r.inputs["seed"] = o.seed;
  r.inputs["samples"] = o.samples;
  Rng rng(o.seed);
  const Quiver* q = in.quiver ? &*in.quiver : nullptr;
  std::size_t ok_deg = 0, ok_chi = 0, ok_third = 0;
  Json pairs = Json::array();
  for (int s = 0; s < o.samples; ++s) {
    const PerfectComplex m = random_perfect(in.algebra, rng, q);
    const PerfectComplex n = random_perfect(in.algebra, rng, q);
    bool deg = false, chi = false, third = false;
    Json detail;
    serre_pair_checks(m, n, o.cap, deg, chi, third, detail);
    ok_deg += deg;
    ok_chi += chi;
    ok_third += third;
    pairs.push_back(std::move(detail));
  }
  const std::string n = std::to_string(o.samples);
  const std::string in_text = in.algebra->name() + ", seed " + std::to_string(o.seed);
  r.add("serre_degreewise", "dim Hom(M, N[i]) = dim Hom(N, S(M)[-i])", in_text, n + " pairs", std::to_string(ok_deg) + " pairs",
        ok_deg == static_cast<std::size_t>(o.samples));
  r.add("serre_euler", "chi(M, N) = chi(N, S(M))", in_text, n + " pairs", std::to_string(ok_chi) + " pairs",
        ok_chi == static_cast<std::size_t>(o.samples));
  r.add("serre_euler_swapped", "chi(M, S(N)) = chi(N, M)", in_text, n + " pairs", std::to_string(ok_third) + " pairs",
        ok_third == static_cast<std::size_t>(o.samples));
  r.results["pairs"] = pairs;
  return 0;
}

// --- smooth-check ----------------------------------------------------------

void smooth_checks(Report& r, const std::string& name, const AlgebraPtr& a, int cap) {
  const PerfectComplex res = projective_resolution(diagonal_bimodule(a), cap);
  const int length = res.empty() ? 0 : res.hi() - res.lo();
  Json degrees = Json::array();
  for (int n = res.lo(); n <= res.hi(); ++n) degrees.push_back(res.summands(n).size());
  r.add("smooth", "diagonal bimodule is perfect", name, "finite resolution within cap " + std::to_string(cap),
        "length " + std::to_string(length), true);
  r.add("proper", "finite-dimensional algebras are proper", name, "true", check_proper(a) ? "true" : "false", check_proper(a));
  r.results["resolution"] = {{"lo", res.lo()}, {"summands_per_degree", degrees}, {"length", length}, {"rank", res.rank()}};
}

int smooth_command(Report& r, const std::string& arg, const Options& o) {
  const AlgebraInput in = load_algebra(arg, r.inputs["algebra"]);
  smooth_checks(r, in.algebra->name(), in.algebra, o.cap);
  return 0;
}

// --- hochschild ------------------------------------------------------------

Json profile_json(const HHProfile& p, int top) {
  Json out = Json::array();
  for (int n = 0; n <= top; ++n) out.push_back(p[n]);
  return out;
}

void hochschild_checks(Report& r, const std::string& name, const HochschildContext& ctx, const Module& w, int depth,
                       bool bar) {
  const HHProfile hh = ctx.homology(Complex::concentrated(w));
  const int top = std::max(depth, hh.dims.last_nonzero());
  r.results["HH"] = profile_json(hh, top);
  r.results["euler_characteristic"] = hh.euler_characteristic();
  if (!bar) return;
  const HHProfile b = bar_oracle(ctx.algebra(), w, depth);
  bool same = true;
  for (int n = 0; n <= depth; ++n) same = same && hh[n] == b[n];
  r.add("hochschild_vs_bar", "resolution and bar complex give the same HH_n", name + ", n <= " + std::to_string(depth),
        profile_json(b, depth).dump(), profile_json(hh, depth).dump(), same);
  r.results["bar"] = profile_json(b, depth);
}

int hochschild_command(Report& r, const std::string& arg, const std::string& coeff, bool bar, const Options& o) {
  const AlgebraInput in = load_algebra(arg, r.inputs["algebra"]);
  r.inputs["coefficients"] = coeff;
  r.inputs["bar_depth"] = o.bar_depth;
  const AlgebraPtr env = enveloping(in.algebra);
  const HochschildContext ctx(in.algebra, o.cap, env);
  std::string name = coeff;
  Complex w;
  if (coeff == "diagonal" || coeff == "free" || coeff == "dual") {
    for (auto& b : corpus_bimodules(in.algebra, env))
      if (b.name == coeff) w = Complex::concentrated(b.module);
  } else {
    Json j = read_json_file(coeff);
    if (j.is_object() && j.contains("coefficients")) j = j.at("coefficients");
    r.inputs["coefficients"] = j;
    w = complex_from_json(j, {env, std::nullopt});
  }
  const std::string label = in.algebra->name() + " with " + name + " coefficients";
  if (w.lo() == 0 && w.hi() == 0) {
    hochschild_checks(r, label, ctx, w.term(0), o.bar_depth, bar);
  } else {
    if (bar) throw UnsupportedInput("the bar complex check needs module coefficients");
    const HHProfile hh = ctx.homology(w);
    r.results["HH"] = dims_to_json(hh.dims);
    r.results["euler_characteristic"] = hh.euler_characteristic();
  }
  r.results["diagonal_resolution_length"] = ctx.diagonal_resolution().hi() - ctx.diagonal_resolution().lo();
  return 0;
}

// --- scenario commands -----------------------------------------------------

std::string pair_name(const HomSpaceModel& m) { return m.source.name + " -> " + m.target.name; }

Json model_json(const HomSpaceModel& m) {
  return {{"source", m.source.name},
          {"target", m.target.name},
          {"dimension", m.basis.size()},
          {"reverse_dimension", m.reverse_basis.size()},
          {"basis", m.gram_chi.basis},
          {"gram_chi", matrix_to_json(m.gram_chi.values)},
          {"gram_int", matrix_to_json(m.gram_int.values)},
          {"pairing", matrix_to_json(m.pairing)}};
}

std::string count_text(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + " of " + std::to_string(total);
}

int intersect_command(Report& r, const std::string& arg, const Options& o) {
  const Scenario s = load_scenario(arg, o);
  r.inputs = scenario_echo(s);
  Workspace ws(s.options.cap);
  const NCMotive src = load_motive(ws, s.source), dst = load_motive(ws, s.target);
  const HomSpaceModel m = ws.build_hom_model(src, dst);
  std::size_t ok = 0, total = 0;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t k = 0; k < m.reverse_basis.size(); ++k, ++total)
      ok += m.pairing(i, k) == ws.intersection_number(m.reverse_basis[k], m.basis[i]);
  r.add("intersection_symmetry_basis", "<X . Y> = <Y . X>", pair_name(m), count_text(total, total), count_text(ok, total),
        ok == total);
  Rng rng(s.options.seed);
  std::size_t sok = 0;
  for (int k = 0; k < s.options.samples; ++k) {
    const Correspondence x = random_correspondence(ws, src.algebra, dst.algebra, rng);
    const Correspondence y = random_correspondence(ws, dst.algebra, src.algebra, rng);
    sok += ws.intersection_number(x, y) == ws.intersection_number(y, x);
  }
  r.add("intersection_symmetry_sampled", "<X . Y> = <Y . X>", pair_name(m) + ", seed " + std::to_string(s.options.seed),
        count_text(s.options.samples, s.options.samples), count_text(sok, s.options.samples),
        sok == static_cast<std::size_t>(s.options.samples));
  r.results["model"] = model_json(m);
  return 0;
}

int trace_command(Report& r, const std::string& arg, const Options& o) {
  const Scenario s = load_scenario(arg, o);
  r.inputs = scenario_echo(s);
  Workspace ws(s.options.cap);
  const NCMotive src = load_motive(ws, s.source), dst = load_motive(ws, s.target);
  const HomSpaceModel m = ws.build_hom_model(src, dst);
  const std::size_t n = m.basis.size();
  Matrix traces(n, n);
  std::size_t ok = 0, sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Correspondence d = ws.dualize(m.basis[i]);
    for (std::size_t k = 0; k < n; ++k) {
      traces(i, k) = ws.trace(ws.compose(d, m.basis[k]));
      ok += traces(i, k) == m.gram_chi.values(i, k);
      sq += m.gram_int.values(i, k) == m.gram_chi.values(i, k);
    }
  }
  r.add("trace_formula_basis", "chi(X, Y) = trace of Y (x)_B D(X)", pair_name(m), count_text(n * n, n * n),
        count_text(ok, n * n), ok == n * n);
  r.add("commutative_square_basis", "chi(X, Y) = <D(X) . Y>", pair_name(m), count_text(n * n, n * n),
        count_text(sq, n * n), sq == n * n);
  Rng rng(s.options.seed);
  std::size_t tok = 0, qok = 0;
  for (int k = 0; k < s.options.samples; ++k) {
    const Correspondence x = random_correspondence(ws, src.algebra, dst.algebra, rng);
    const Correspondence y = random_correspondence(ws, src.algebra, dst.algebra, rng);
    const Correspondence dx = ws.dualize(x);
    const Rational chi = ws.chi_hom(x, y);
    tok += chi == ws.trace(ws.compose(dx, y));
    qok += chi == ws.intersection_number(dx, y);
  }
  const std::string in_text = pair_name(m) + ", seed " + std::to_string(s.options.seed);
  const std::size_t total = static_cast<std::size_t>(s.options.samples);
  r.add("trace_formula_sampled", "chi(X, Y) = trace of Y (x)_B D(X)", in_text, count_text(total, total),
        count_text(tok, total), tok == total);
  r.add("commutative_square_sampled", "chi(X, Y) = <D(X) . Y>", in_text, count_text(total, total),
        count_text(qok, total), qok == total);
  r.results["model"] = model_json(m);
  r.results["traces"] = matrix_to_json(traces);
  return 0;
}

Json kernel_json(const std::vector<Vector>& k) {
  Json out = Json::array();
  for (const auto& v : k) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

void verify_model(Report& r, Workspace& ws, const NCMotive& src, const NCMotive& dst) {
  const HomSpaceModel m = ws.build_hom_model(src, dst);
  const EquivalenceReport e = verify_equivalence(ws, m);
  for (const auto& c : e.checks) r.checks.push_back(c);
  r.results["model"] = model_json(m);
  r.results["kernel_chi"] = kernel_json(e.ker_left);
  r.results["kernel_chi_right"] = kernel_json(e.ker_right);
  r.results["numerical_kernel"] = kernel_json(e.numerical);
  r.results["nondegenerate"] = e.nondegenerate;
  r.results["statement"] = e.statement;
}

int verify_command(Report& r, const std::string& arg, const Options& o) {
  const Scenario s = load_scenario(arg, o);
  r.inputs = scenario_echo(s);
  Workspace ws(s.options.cap);
  verify_model(r, ws, load_motive(ws, s.source), load_motive(ws, s.target));
  return 0;
}

// --- corpus ----------------------------------------------------------------

struct CorpusRow {
  std::string name;
  Report report;
  double seconds = 0;
};

int corpus_command(std::vector<CorpusRow>& rows, const Options& o) {
  Workspace ws(o.cap);
  auto timed = [&](const std::string& name, auto&& body) {
    CorpusRow row{name, {}, 0};
    row.report.command = "corpus";
    const auto t0 = std::chrono::steady_clock::now();
    body(row.report);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(row));
  };
  for (const auto& ca : corpus_algebras()) {
    const AlgebraInput in{ca.algebra, ca.quiver};
    timed("euler " + ca.name, [&](Report& r) { euler_checks(r, ca.name, in, o.cap); });
    timed("smooth " + ca.name, [&](Report& r) { smooth_checks(r, ca.name, ca.algebra, o.cap); });
    const HochschildContext& ctx = ws.hochschild(ca.algebra);
    for (const auto& b : corpus_bimodules(ca.algebra, ctx.enveloping()))
      timed("hochschild " + ca.name + " " + b.name, [&](Report& r) {
        hochschild_checks(r, ca.name + " with " + b.name + " coefficients", ctx, b.module, o.bar_depth, true);
      });
  }
  for (const auto& cm : corpus_models()) {
    timed("verify " + cm.name, [&](Report& r) {
      const NCMotive src = make_motive(ws, cm.source.algebra + (cm.source.idempotent == "id" ? "" : " " + cm.source.idempotent),
                                       corpus_algebra(cm.source.algebra).algebra, cm.source.idempotent);
      const NCMotive dst = make_motive(ws, cm.target.algebra + (cm.target.idempotent == "id" ? "" : " " + cm.target.idempotent),
                                       corpus_algebra(cm.target.algebra).algebra, cm.target.idempotent);
      verify_model(r, ws, src, dst);
    });
  }
  std::sort(rows.begin(), rows.end(), [](const CorpusRow& a, const CorpusRow& b) { return a.name < b.name; });
  return 0;
}

void write_report(const Json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative numerical motives over path algebras, in exact arithmetic", "ncmot"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the JSON report to this path instead of stdout");
    sub->add_option("--seed", o.seed, "Seed for randomized checks")->each([&](const std::string&) { o.seed_set = true; });
    sub->add_option("--cap", o.cap, "Resolution length cap")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.cap_set = true; });
    sub->add_option("--bar-depth", o.bar_depth, "Highest degree compared against the bar complex")
        ->check(CLI::NonNegativeNumber)
        ->each([&](const std::string&) { o.bar_depth_set = true; });
    sub->add_option("--samples", o.samples, "Number of random samples")
        ->check(CLI::NonNegativeNumber)
        ->each([&](const std::string&) { o.samples_set = true; });
    sub->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  };
  std::string input, coefficients = "diagonal";
  bool bar_check = false;
  auto with_input = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, what)->required();
    common(sub);
    return sub;
  };
  const char* alg_help = "Algebra JSON file or corpus:<name>";
  CLI::App* euler = with_input("euler-matrix", "Euler form on the simple modules", alg_help);
  CLI::App* serre_cmd = with_input("serre-check", "Serre duality on random perfect complexes", alg_help);
  CLI::App* smooth = with_input("smooth-check", "Resolve the diagonal bimodule", alg_help);
  CLI::App* hh = with_input("hochschild", "Hochschild homology dimensions", alg_help);
  hh->add_option("--coefficients", coefficients, "diagonal, free, dual, or a bimodule JSON file");
  hh->add_flag("--bar-check", bar_check, "Compare with the bar complex up to --bar-depth");
  CLI::App* intersect = with_input("intersect", "Intersection pairing and its symmetry", "Scenario JSON file");
  CLI::App* trace_cmd = with_input("trace", "Euler pairing against the categorical trace", "Scenario JSON file");
  CLI::App* verify = with_input("verify", "Kernel of the Euler pairing against numerical equivalence", "Scenario JSON file");
  CLI::App* corpus = app.add_subcommand("corpus", "Run the built-in corpus and print a pass/fail table");
  common(corpus);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "ncmot: " << e.what() << "\n";
    return kMalformed;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    if (corpus->parsed()) {
      std::vector<CorpusRow> rows;
      corpus_command(rows, o);
      bool all = true;
      std::size_t width = 8;
      for (const auto& row : rows) width = std::max(width, row.name.size());
      out << std::left << std::setw(static_cast<int>(width)) << "scenario" << "  checks  result\n";
      Json scenarios = Json::array();
      for (const auto& row : rows) {
        const bool pass = row.report.pass();
        all = all && pass;
        out << std::left << std::setw(static_cast<int>(width)) << row.name << "  " << std::right << std::setw(6)
            << row.report.checks.size() << "  " << (pass ? "PASS" : "FAIL");
        if (o.timing) out << "  " << std::fixed << std::setprecision(3) << row.seconds << " s";
        out << "\n";
        Json s = row.report.to_json();
        s.erase("format");
        s.erase("command");
        s["name"] = row.name;
        if (o.timing) s["timing"] = {{"seconds", row.seconds}};
        scenarios.push_back(std::move(s));
      }
      out << (all ? "corpus: all scenarios pass\n" : "corpus: some scenarios FAIL\n");
      if (!o.out.empty()) {
        Json j = {{"format", kFormatVersion}, {"command", "corpus"}, {"scenarios", scenarios}, {"pass", all},
                  {"verdict", all ? "pass" : "fail"}};
        if (o.timing) j["timing"] = {{"seconds", elapsed()}};
        write_report(j, o, out);
      }
      return all ? kPass : kFail;
    }
    Report r;
    if (euler->parsed()) {
      r.command = "euler-matrix";
      euler_command(r, input, o);
    } else if (serre_cmd->parsed()) {
      r.command = "serre-check";
      serre_command(r, input, o);
    } else if (smooth->parsed()) {
      r.command = "smooth-check";
      smooth_command(r, input, o);
    } else if (hh->parsed()) {
      r.command = "hochschild";
      hochschild_command(r, input, coefficients, bar_check, o);
    } else if (intersect->parsed()) {
      r.command = "intersect";
      intersect_command(r, input, o);
    } else if (trace_cmd->parsed()) {
      r.command = "trace";
      trace_command(r, input, o);
    } else if (verify->parsed()) {
      r.command = "verify";
      verify_command(r, input, o);
    }
    Json j = r.to_json();
    if (o.timing) j["timing"] = {{"seconds", elapsed()}};
    write_report(j, o, out);
    return r.pass() ? kPass : kFail;
  } catch (const MalformedInput& e) {
    err << "ncmot: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    err << "ncmot: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const UnsupportedInput& e) {
    err << "ncmot: unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const AlgebraMismatch& e) {
    err << "ncmot: unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "ncmot: resolution cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "ncmot: " << e.what() << "\n";
    return kUnsupported;
  }
}

}  // namespace ncmot::cli
