#include <doctest.h>

#include "ncmot/corpus.hpp"
#include "ncmot/linalg.hpp"
#include "ncmot/random.hpp"
#include "oracles.hpp"

using namespace ncmot;

namespace {

std::vector<long long> dims_class(const Module& m) {
  std::vector<long long> out;
  for (auto d : m.dimension_vector()) out.push_back(static_cast<long long>(d));
  return out;
}

}  // namespace

TEST_SUITE("derived-invariants") {

TEST_CASE("Euler matrix matches the quiver form for every corpus quiver") {
  for (const auto& ca : corpus_algebras()) {
    if (!ca.quiver) continue;
    const PairingMatrix e = euler_matrix(ca.algebra);
    CHECK(e.values == oracle::ringel_form(*ca.quiver));
    CHECK(oracle::laplace_determinant(e.values) == 1);
  }
}

TEST_CASE("Euler matrix of the enveloping algebra is a Kronecker product") {
  for (const char* name : {"A2", "Kronecker"}) {
    const auto& ca = corpus_algebra(name);
    const PairingMatrix e = euler_matrix(enveloping(ca.algebra));
    CHECK(e.values == kronecker(oracle::ringel_form(oracle::reversed(*ca.quiver)), oracle::ringel_form(*ca.quiver)));
  }
}

TEST_CASE("ground field and semisimple algebras") {
  CHECK(euler_matrix(Algebra::field()).values == Matrix::identity(1));
  CHECK(euler_matrix(corpus_algebra("QxQ").algebra).values == Matrix::identity(2));
}

TEST_CASE("K0 class of a resolution equals the dimension vector") {
  Rng rng(17);
  const auto& ca = corpus_algebra("A3");
  for (int t = 0; t < 10; ++t) {
    const Module m = random_representation(ca.algebra, *ca.quiver, rng, 3);
    CHECK(k0_class(projective_resolution(m)).coords == dims_class(m));
  }
}

TEST_CASE("Hom complex shifts with its second argument") {
  Rng rng(31);
  const auto& ca = corpus_algebra("Kronecker");
  for (int t = 0; t < 6; ++t) {
    const PerfectComplex m = random_perfect(ca.algebra, rng, &*ca.quiver);
    const PerfectComplex n = random_perfect(ca.algebra, rng, &*ca.quiver);
    const GradedDims h = homology_dims(hom_complex(m, n.to_complex()));
    for (int k : {-1, 2}) {
      const GradedDims hk = homology_dims(hom_complex(m, shift(n, k).to_complex()));
      for (int i = -6; i <= 6; ++i) CHECK(hk[i] == h[i - k]);
      CHECK(euler_pairing(m, shift(n, k)) == (k % 2 == 0 ? 1 : -1) * euler_pairing(m, n));
    }
  }
}

TEST_CASE("Euler pairing does not depend on the chosen resolution") {
  Rng rng(41);
  const auto& ca = corpus_algebra("A3");
  for (int t = 0; t < 6; ++t) {
    const PerfectComplex m = random_perfect(ca.algebra, rng, &*ca.quiver);
    const PerfectComplex n = random_perfect(ca.algebra, rng, &*ca.quiver);
    // Adding the contractible complex P -> P changes the model but not the class.
    PerfectMap id;
    id[0] = RingMatrix(1, 1);
    id[0](0, 0) = {{ca.algebra->idempotent(1), Rational(1)}};
    const PerfectComplex p = PerfectComplex::projective(ca.algebra, 1);
    const PerfectComplex bigger = direct_sum(m, cone(p, p, id));
    CHECK(euler_pairing(bigger, n) == euler_pairing(m, n));
    CHECK(euler_pairing(n, bigger) == euler_pairing(n, m));
    CHECK(homology_dims(hom_complex(bigger, n.to_complex())) == homology_dims(hom_complex(m, n.to_complex())));
    CHECK(euler_pairing(resolve_complex(bigger.to_complex()), n) == euler_pairing(m, n));
  }
}

TEST_CASE("cones are additive on K0 and on the Euler pairing") {
  const auto a = corpus_algebra("A2").algebra;
  const PerfectComplex p1 = PerfectComplex::projective(a, 1), p0 = PerfectComplex::projective(a, 0);
  std::size_t arrow = 0;
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (a->label(b) == "a") arrow = b;
  PerfectMap f;
  f[0] = RingMatrix(1, 1);
  f[0](0, 0) = {{arrow, Rational(1)}};
  REQUIRE(is_chain_map(p1, p0, f));
  const PerfectComplex c = cone(p1, p0, f);
  CHECK(k0_class(c) == k0_class(p0) - k0_class(p1));
  for (std::size_t k = 0; k < 2; ++k) {
    const PerfectComplex s = projective_resolution(simple_module(a, k));
    CHECK(euler_pairing(s, c) == euler_pairing(s, p0) - euler_pairing(s, p1));
    CHECK(euler_pairing(c, s) == euler_pairing(p0, s) - euler_pairing(p1, s));
  }
}

TEST_CASE("Serre functor sends projectives to injectives") {
  for (const char* name : {"A2", "A3", "Kronecker"}) {
    const auto a = corpus_algebra(name).algebra;
    for (std::size_t k = 0; k < a->idempotent_count(); ++k) {
      const PerfectComplex s = serre(PerfectComplex::projective(a, k));
      const GradedDims h = homology_dims(s.to_complex());
      CHECK(h.first_nonzero() == 0);
      CHECK(h.last_nonzero() == 0);
      CHECK(k0_class(s).coords == dims_class(injective_module(a, k)));
    }
  }
}

TEST_CASE("degreewise Serre duality on random pairs") {
  Rng rng(77);
  for (const char* name : {"A2", "Kronecker"}) {
    const auto& ca = corpus_algebra(name);
    for (int t = 0; t < 5; ++t) {
      const PerfectComplex m = random_perfect(ca.algebra, rng, &*ca.quiver);
      const PerfectComplex n = random_perfect(ca.algebra, rng, &*ca.quiver);
      const GradedDims lhs = homology_dims(hom_complex(m, n.to_complex()));
      const GradedDims rhs = homology_dims(hom_complex(n, serre(m).to_complex()));
      for (int i = -6; i <= 6; ++i) CHECK(lhs[i] == rhs[-i]);
      CHECK(euler_pairing(m, n) == euler_pairing(n, serre(m)));
    }
  }
}

TEST_CASE("left and right kernels of a singular form") {
  PairingMatrix g{Matrix::from_rows({{1, 1}, {1, 1}}), {"x", "y"}};
  CHECK(kernel_left(g).size() == 1);
  CHECK(same_span(kernel_left(g), kernel_right(g), 2));
  PairingMatrix h{Matrix::from_rows({{0, 1}, {0, 0}}), {"x", "y"}};
  CHECK_FALSE(same_span(kernel_left(h), kernel_right(h), 2));
}

TEST_CASE("smoothness: hereditary algebras have length one, A2 x A2 length two") {
  CHECK(check_smooth(corpus_algebra("A3").algebra).length == 1);
  CHECK(check_smooth(corpus_algebra("Kronecker").algebra).length == 1);
  CHECK(check_smooth(corpus_algebra("QxQ").algebra).length == 0);
  const auto s = check_smooth(corpus_algebra("A2xA2").algebra);
  CHECK(s.smooth);
  CHECK(s.length == 2);
  CHECK_FALSE(check_smooth(corpus_algebra("A2xA2").algebra, 1).smooth);
  CHECK(check_proper(corpus_algebra("A3").algebra));
}

TEST_CASE("bimodule dual is an involution on homology") {
  Rng rng(9);
  const auto a = corpus_algebra("A2").algebra, b = corpus_algebra("Kronecker").algebra;
  const auto r = bimodule_algebra(a, b);
  for (int t = 0; t < 6; ++t) {
    const PerfectComplex x = random_perfect(r, rng);
    const PerfectComplex dx = dual(x);
    CHECK(same_algebra(dx.ring(), bimodule_algebra(b, a)));
    const PerfectComplex ddx = dual(dx);
    CHECK(same_algebra(ddx.ring(), r));
    CHECK(homology_dims(ddx.to_complex()) == homology_dims(x.rebased(ddx.ring()).to_complex()));
    CHECK(k0_class(ddx).coords == k0_class(x).coords);
  }
}

}
