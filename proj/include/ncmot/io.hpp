#pragma once

// JSON reading and writing for algebras, modules, complexes, scenarios and
// reports. Layouts are documented in docs/formats.md. Readers throw
// MalformedInput for structural problems and UnsupportedInput for inputs
// outside the supported class (cyclic quivers, non-basic algebras).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncmot/corpus.hpp"
#include "ncmot/hochschild.hpp"
#include "ncmot/motives.hpp"

namespace ncmot {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

struct AlgebraInput {
  AlgebraPtr algebra;
  std::optional<Quiver> quiver;
};

/// Accepts "corpus:<name>", {"corpus": name}, a quiver object, {"quiver": ...},
/// {"structure": ...} and {"tensor": [x, y]}.
AlgebraInput algebra_from_json(const Json& j);
/// Inline structure-constant form.
Json algebra_to_json(const Algebra& a);

/// {"dim", "action": {label: matrix}} or {"representation": {"dims",
/// "arrows"}} (quiver algebras only). Missing actions are filled in from
/// products of given ones.
Module module_from_json(const Json& j, const AlgebraInput& over);
Json module_to_json(const Module& m);

/// {"lo", "terms": [module...], "differentials": [matrix...]}; a bare module
/// is read as a complex concentrated in degree 0.
Complex complex_from_json(const Json& j, const AlgebraInput& over);
Json complex_to_json(const Complex& c);
Json perfect_to_json(const PerfectComplex& p);

Json dims_to_json(const GradedDims& d);

struct ScenarioOptions {
  int cap = kDefaultResolutionCap;
  int bar_depth = 4;
  std::uint64_t seed = 1;
  int samples = 10;
};

struct ScenarioMotive {
  Json algebra;
  std::string idempotent = "id";
};

struct Scenario {
  std::string name;
  ScenarioMotive source;
  ScenarioMotive target;
  ScenarioOptions options;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

/// FNV-1a 64 of the text, as 16 hex digits.
std::string fnv_digest(const std::string& text);

Json check_to_json(const CheckRecord& c);

/// Parses a file; throws MalformedInput when it is missing or not JSON.
Json read_json_file(const std::string& path);

}  // namespace ncmot
