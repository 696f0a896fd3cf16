#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ncmot/io.hpp"

using namespace ncmot;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ncmot_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kQScenario = R"({"format": 1, "source": {"algebra": "corpus:Q"}, "target": {"algebra": "corpus:Q"},
  "options": {"samples": 2}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify on the rational identity scenario passes") {
  const Outcome o = run({"verify", write_temp("q.json", kQScenario)});
  CHECK(o.code == cli::kPass);
  const Json j = Json::parse(o.out);
  CHECK(j["format"] == 1);
  CHECK(j["pass"] == true);
  CHECK(j["results"]["kernel_chi"].empty());
  CHECK(j["results"]["numerical_kernel"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
  }
}

TEST_CASE("euler-matrix on an A2 quiver file") {
  const std::string path = write_temp("a2.json", R"({"vertices": 2, "arrows": [{"from": 0, "to": 1, "label": "a"}]})");
  const Outcome o = run({"euler-matrix", path});
  CHECK(o.code == cli::kPass);
  const Json j = Json::parse(o.out);
  CHECK(j["results"]["euler_matrix"] == Json::parse("[[1,-1],[0,1]]"));
  CHECK(j["results"]["determinant"] == 1);
}

TEST_CASE("other subcommands run on corpus inputs") {
  CHECK(run({"smooth-check", "corpus:Kronecker"}).code == cli::kPass);
  CHECK(run({"serre-check", "corpus:A2", "--samples", "3", "--seed", "5"}).code == cli::kPass);
  const Outcome h = run({"hochschild", "corpus:A2", "--bar-check"});
  CHECK(h.code == cli::kPass);
  CHECK(Json::parse(h.out)["results"]["HH"] == Json::parse("[2,0,0,0,0]"));
  CHECK(run({"hochschild", "corpus:A3", "--coefficients", "free", "--bar-check", "--bar-depth", "2"}).code == cli::kPass);
  const std::string sc = write_temp("a2.json", R"({"format": 1, "source": {"algebra": "corpus:A2", "idempotent": "P0"},
    "target": {"algebra": "corpus:Kronecker"}, "options": {"samples": 2}})");
  CHECK(run({"trace", sc}).code == cli::kPass);
  CHECK(run({"intersect", sc}).code == cli::kPass);
}

TEST_CASE("hochschild accepts bimodule coefficient files") {
  const std::string path = write_temp("coeff.json", R"({"coefficients": {"dim": 1,
    "left": {"e0": [[1]], "e1": [[0]], "a": [[0]]}, "right": {"e0": [[1]], "e1": [[0]], "a": [[0]]}}})");
  const Outcome o = run({"hochschild", "corpus:A2", "--coefficients", path, "--bar-check"});
  CHECK(o.code == cli::kPass);
  CHECK(Json::parse(o.out)["results"]["HH"] == Json::parse("[1,0,0,0,0]"));
}

TEST_CASE("reports are byte-identical for equal seeds") {
  const std::string sc = write_temp("det.json", kQScenario);
  const Outcome a = run({"serre-check", "corpus:Kronecker", "--seed", "42", "--samples", "4"});
  const Outcome b = run({"serre-check", "corpus:Kronecker", "--seed", "42", "--samples", "4"});
  CHECK(a.out == b.out);
  const Outcome c = run({"serre-check", "corpus:Kronecker", "--seed", "43", "--samples", "4"});
  CHECK(a.out != c.out);
  CHECK(run({"trace", sc, "--seed", "3"}).out == run({"trace", sc, "--seed", "3"}).out);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "ncmot_test_out.json";
  std::filesystem::remove(path);
  const Outcome o = run({"euler-matrix", "corpus:A3", "--out", path.string()});
  CHECK(o.code == cli::kPass);
  CHECK(o.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["command"] == "euler-matrix");
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"euler-matrix", write_temp("bad.json", "{\"vertices\": 2,")}).code == cli::kMalformed);
  CHECK(run({"euler-matrix", "/nonexistent/file.json"}).code == cli::kMalformed);
  CHECK(run({"verify", write_temp("nofmt.json", R"({"source": {"algebra": "corpus:Q"}})")}).code == cli::kMalformed);
  CHECK(run({"verify", write_temp("badidem.json", R"({"format": 1, "source": {"algebra": "corpus:A2", "idempotent": "P9"}})")})
            .code == cli::kMalformed);
  const std::string cyclic = write_temp("cyc.json", R"({"vertices": 2, "arrows": [{"from": 0, "to": 1}, {"from": 1, "to": 0}]})");
  const Outcome c = run({"euler-matrix", cyclic});
  CHECK(c.code == cli::kUnsupported);
  CHECK(c.err.find("cycle") != std::string::npos);
  CHECK(run({"verify", write_temp("notidem.json", R"({"format": 1, "source": {"algebra": "corpus:A3", "idempotent": "P0+P2"}})")})
            .code == cli::kUnsupported);
  CHECK(run({"smooth-check", "corpus:A2xA2", "--cap", "1"}).code == cli::kCapExceeded);
  CHECK(run({"frobnicate"}).code == cli::kMalformed);
  CHECK(run({}).code == cli::kMalformed);
  CHECK(run({"euler-matrix", "corpus:A2", "--cap", "0"}).code == cli::kMalformed);
}

}
