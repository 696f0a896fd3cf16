#include <doctest.h>

#include "ncmot/corpus.hpp"
#include "ncmot/hochschild.hpp"
#include "ncmot/random.hpp"
#include "oracles.hpp"

using namespace ncmot;

TEST_SUITE("hochschild") {

TEST_CASE("HH of A2 with diagonal coefficients is (2, 0, 0, 0, 0)") {
  const auto a = corpus_algebra("A2").algebra;
  const HHProfile h = hochschild(a, diagonal_bimodule(a));
  for (int n = 0; n <= 4; ++n) CHECK(h[n] == (n == 0 ? 2u : 0u));
  const HHProfile bar = bar_oracle(a, diagonal_bimodule(a), 4);
  for (int n = 0; n <= 4; ++n) CHECK(bar[n] == h[n]);
}

TEST_CASE("HH_0 of a path algebra counts vertices and higher groups vanish") {
  for (const auto& ca : corpus_algebras()) {
    if (!ca.quiver) continue;
    const HHProfile h = hochschild(ca.algebra, diagonal_bimodule(ca.algebra));
    CHECK(h[0] == ca.quiver->vertex_count);
    for (int n = 1; n <= 4; ++n) CHECK(h[n] == 0);
  }
}

TEST_CASE("free coefficients give A in degree zero") {
  for (const char* name : {"Q", "A2", "A3", "Kronecker"}) {
    const auto a = corpus_algebra(name).algebra;
    const HHProfile h = hochschild(a, free_bimodule(a));
    CHECK(h[0] == a->dim());
    CHECK(h.euler_characteristic() == static_cast<long long>(a->dim()));
  }
}

TEST_CASE("dual coefficients match the cohomology count for hereditary quivers") {
  for (const char* name : {"A2", "A3", "Kronecker"}) {
    const auto& ca = corpus_algebra(name);
    const auto env = enveloping(ca.algebra);
    const HHProfile h = hochschild(ca.algebra, Complex::concentrated(dual_bimodule_module(ca.algebra, env)));
    CHECK(h[0] == 1);
    CHECK(h.euler_characteristic() == oracle::hochschild_cohomology_euler(*ca.quiver));
  }
}

TEST_CASE("resolution agrees with the bar complex on every corpus coefficient bimodule") {
  for (const auto& ca : corpus_algebras()) {
    if (ca.algebra->dim() > 4) continue;
    const HochschildContext ctx(ca.algebra);
    for (const auto& b : corpus_bimodules(ca.algebra, ctx.enveloping())) {
      CAPTURE(ca.name);
      CAPTURE(b.name);
      const HHProfile h = ctx.homology(Complex::concentrated(b.module));
      const HHProfile bar = bar_oracle(ca.algebra, b.module, 4);
      for (int n = 0; n <= 4; ++n) CHECK(h[n] == bar[n]);
    }
  }
}

TEST_CASE("relative and full bar complexes agree on tiny algebras") {
  for (const char* name : {"Q", "QxQ", "A2"}) {
    const auto a = corpus_algebra(name).algebra;
    const auto env = enveloping(a);
    for (const auto& b : corpus_bimodules(a, env)) {
      const HHProfile rel = bar_oracle(a, b.module, 3);
      const HHProfile full = bar_oracle_full(a, b.module, 3);
      for (int n = 0; n <= 3; ++n) CHECK(rel[n] == full[n]);
    }
  }
}

TEST_CASE("complex coefficients: shifting moves HH and the Euler characteristic") {
  const auto a = corpus_algebra("Kronecker").algebra;
  const HochschildContext ctx(a);
  const Complex w = Complex::concentrated(dual_bimodule_module(a, ctx.enveloping()), 0);
  const HHProfile h = ctx.homology(w);
  const HHProfile h1 = ctx.homology(shift(w, 1));
  for (int n = -2; n <= 4; ++n) CHECK(h1[n - 1] == h[n]);
  CHECK(ctx.euler_characteristic(w) == h.euler_characteristic());
  CHECK(ctx.euler_characteristic(shift(w, 1)) == -h.euler_characteristic());
}

TEST_CASE("Euler characteristic from components matches homology on random perfect coefficients") {
  Rng rng(6);
  const auto a = corpus_algebra("A2").algebra;
  const HochschildContext ctx(a);
  for (int t = 0; t < 6; ++t) {
    const PerfectComplex w = random_perfect(ctx.enveloping(), rng);
    CHECK(ctx.euler_characteristic(w.to_complex()) == ctx.homology(w.to_complex()).euler_characteristic());
  }
}

}
