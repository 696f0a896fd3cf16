#pragma once

// Built-in algebras, bimodules and motive pairs used by the `corpus`
// command, the acceptance suite and the tests.
//
// Idempotent specs: a signed sum of terms "id" (or "1") and "P<k>", e.g.
// "id", "P0", "1-P1", "id-P0-P2". P<k> is the projector onto the k-th
// primitive idempotent.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncmot/motives.hpp"

namespace ncmot {

Quiver quiver_a2();
Quiver quiver_a3();
Quiver quiver_kronecker();
Quiver quiver_two_points();

struct CorpusAlgebra {
  std::string name;
  AlgebraPtr algebra;
  std::optional<Quiver> quiver;  // absent for the field and tensor products
};

/// Q, QxQ, A2, A3, Kronecker, A2xA2, A2xKronecker in that order.
const std::vector<CorpusAlgebra>& corpus_algebras();
/// Throws std::out_of_range for unknown names.
const CorpusAlgebra& corpus_algebra(std::string_view name);

/// DA = Hom_Q(A, Q) with (a f b)(x) = f(b x a), as a module over A^op (x) A.
Module dual_bimodule_module(const AlgebraPtr& a, const AlgebraPtr& env);

struct NamedModule {
  std::string name;
  Module module;
};

/// Coefficient bimodules for Hochschild checks: the diagonal, the free
/// bimodule, DA, and the simple bimodules S(i, j).
std::vector<NamedModule> corpus_bimodules(const AlgebraPtr& a, const AlgebraPtr& env);

struct MotiveSpec {
  std::string algebra;
  std::string idempotent;
};

struct CorpusModel {
  std::string name;
  MotiveSpec source;
  MotiveSpec target;
};

/// Motive pairs whose Hom-space models the `corpus` command verifies,
/// sorted by name.
const std::vector<CorpusModel>& corpus_models();

/// Throws MalformedInput on a syntax error and std::out_of_range for an
/// idempotent index outside the algebra.
Correspondence parse_idempotent(Workspace& ws, const AlgebraPtr& a, std::string_view spec);

/// Motive (a, e) for an idempotent spec; "id" gives the identity motive.
/// Throws UnsupportedInput when e o e != e on K0 classes.
NCMotive make_motive(Workspace& ws, const std::string& name, const AlgebraPtr& a, std::string_view spec);

}  // namespace ncmot
