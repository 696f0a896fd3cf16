#pragma once

// Seeded generators for randomized checks. All draws go through the given
// engine, so equal seeds give equal objects.

#include <random>

#include "ncmot/motives.hpp"

namespace ncmot {

using Rng = std::mt19937_64;

/// Element of e_t R e_s with integer coefficients in [-bound, bound].
Algebra::Element random_corner_element(const Algebra& r, std::size_t t, std::size_t s, Rng& rng, int bound = 2);

/// P^0 -> P^1 with up to `max_summands` summands on each side and random
/// corner entries.
PerfectComplex random_two_term(const AlgebraPtr& r, Rng& rng, std::size_t max_summands = 2);

/// Random representation of a quiver: vertex dimensions in [0, max_dim] and
/// random integer arrow matrices, as a module over `a` = path_algebra(q).
Module random_representation(const AlgebraPtr& a, const Quiver& q, Rng& rng, std::size_t max_dim = 2);

/// Shifted direct sum of one or two pieces, each a random two-term complex
/// or the resolution of a simple or (for quivers) a random representation.
PerfectComplex random_perfect(const AlgebraPtr& r, Rng& rng, const Quiver* q = nullptr);

/// Up to three terms with small rational coefficients.
Correspondence random_correspondence(Workspace& ws, const AlgebraPtr& a, const AlgebraPtr& b, Rng& rng);

}  // namespace ncmot
