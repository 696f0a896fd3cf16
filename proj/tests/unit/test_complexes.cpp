#include <doctest.h>

#include "ncmot/corpus.hpp"
#include "ncmot/errors.hpp"
#include "ncmot/random.hpp"
#include "oracles.hpp"

using namespace ncmot;

namespace {

ChainMap identity_map(const Complex& c) {
  ChainMap f;
  for (int n = c.lo(); n <= c.hi(); ++n) f[n] = Matrix::identity(c.dim(n));
  return f;
}

}  // namespace

TEST_SUITE("modules-complexes") {

TEST_CASE("projective, injective and simple modules satisfy the module axioms") {
  for (const auto& ca : corpus_algebras()) {
    if (ca.algebra->dim() > 4) continue;
    for (std::size_t k = 0; k < ca.algebra->idempotent_count(); ++k) {
      const Module p = projective_module(ca.algebra, k);
      const Module i = injective_module(ca.algebra, k);
      const Module s = simple_module(ca.algebra, k);
      CHECK(p.satisfies_axioms());
      CHECK(i.satisfies_axioms());
      CHECK(s.satisfies_axioms());
      if (ca.quiver) {
        for (std::size_t v = 0; v < ca.quiver->vertex_count; ++v) {
          CHECK(p.dimension_vector()[v] == oracle::paths_between(*ca.quiver, k, v));
          CHECK(i.dimension_vector()[v] == oracle::paths_between(*ca.quiver, v, k));
        }
      }
    }
  }
}

TEST_CASE("diagonal and dual bimodules") {
  const auto a = corpus_algebra("A3").algebra;
  const auto env = enveloping(a);
  CHECK(diagonal_bimodule(a, env).satisfies_axioms());
  CHECK(dual_bimodule_module(a, env).satisfies_axioms());
  CHECK(free_bimodule(a).dim() == a->dim() * a->dim());
}

TEST_CASE("random representations are modules and differentials are homomorphisms") {
  Rng rng(4);
  const auto& ca = corpus_algebra("Kronecker");
  for (int t = 0; t < 10; ++t) {
    const Module m = random_representation(ca.algebra, *ca.quiver, rng, 3);
    CHECK(m.satisfies_axioms());
    const PerfectComplex p = random_two_term(ca.algebra, rng);
    CHECK(p.is_complex());
    CHECK(p.to_complex().verify());
  }
}

TEST_CASE("homology of a two-term complex P1 -> P0 over A2") {
  const auto a = corpus_algebra("A2").algebra;
  const PerfectComplex s0 = projective_resolution(simple_module(a, 0));
  CHECK(s0.rank() == 2);
  const Complex c = s0.to_complex();
  const GradedDims h = homology_dims(c);
  CHECK(h[0] == 1);
  CHECK(h[-1] == 0);
  CHECK(euler_characteristic(c) == h.euler_characteristic());
}

TEST_CASE("shift moves homology and the cone of the identity is acyclic") {
  Rng rng(12);
  const auto& ca = corpus_algebra("A3");
  for (int t = 0; t < 8; ++t) {
    const Complex c = random_perfect(ca.algebra, rng, &*ca.quiver).to_complex();
    REQUIRE(c.is_complex());
    const GradedDims h = homology_dims(c);
    for (int k : {-2, 1, 3}) {
      const GradedDims hs = homology_dims(shift(c, k));
      for (int n = c.lo() - 4; n <= c.hi() + 4; ++n) CHECK(hs[n] == h[n - k]);
    }
    const ChainMap id = identity_map(c);
    CHECK(is_chain_map(c, c, id));
    CHECK(homology_dims(cone(c, c, id)).all_zero());
  }
}

TEST_CASE("resolutions are quasi-isomorphic to their input") {
  Rng rng(8);
  for (const char* name : {"A2", "A3", "Kronecker"}) {
    const auto& ca = corpus_algebra(name);
    for (int t = 0; t < 5; ++t) {
      const Module m = random_representation(ca.algebra, *ca.quiver, rng, 2);
      const Complex c = Complex::concentrated(m, 1);
      const Resolution r = resolve_with_map(c);
      const Complex p = r.complex.to_complex();
      CHECK(is_chain_map(p, r.target, r.comparison));
      CHECK(homology_dims(cone(p, r.target, r.comparison)).all_zero());
      CHECK(homology_dims(p) == homology_dims(c));
    }
  }
}

TEST_CASE("resolutions stop at the global dimension and respect the cap") {
  const auto a3 = corpus_algebra("A3").algebra;
  for (std::size_t k = 0; k < 3; ++k) {
    const PerfectComplex p = projective_resolution(simple_module(a3, k));
    CHECK(p.hi() - p.lo() <= 1);
  }
  const auto env = enveloping(corpus_algebra("A2xA2").algebra);
  CHECK_THROWS_AS(projective_resolution(diagonal_bimodule(corpus_algebra("A2xA2").algebra, env), 1), CapExceeded);
  CHECK_NOTHROW(projective_resolution(diagonal_bimodule(corpus_algebra("A2xA2").algebra, env), 2));
}

TEST_CASE("direct sums add dimensions") {
  Rng rng(2);
  const auto a = corpus_algebra("Kronecker").algebra;
  const PerfectComplex x = random_two_term(a, rng), y = random_two_term(a, rng);
  const Complex s = direct_sum(x.to_complex(), y.to_complex());
  const GradedDims hx = homology_dims(x.to_complex()), hy = homology_dims(y.to_complex()), hs = homology_dims(s);
  for (int n = -3; n <= 3; ++n) CHECK(hs[n] == hx[n] + hy[n]);
  CHECK(direct_sum(x, y).rank() == x.rank() + y.rank());
}

}
