#include <doctest.h>

#include "../support/models.hpp"
#include "ncmot/corpus.hpp"
#include "ncmot/errors.hpp"
#include "ncmot/linalg.hpp"
#include "ncmot/random.hpp"

using namespace ncmot;

namespace {

Correspondence simple_correspondence(Workspace& ws, const AlgebraPtr& a, const AlgebraPtr& b, std::size_t s) {
  return {a, b, {{Rational(1), projective_resolution(simple_module(ws.ring(a, b), s))}}};
}

}  // namespace

TEST_SUITE("motives") {

TEST_CASE("identity is a unit for composition on classes") {
  Workspace ws;
  Rng rng(1);
  const auto a = corpus_algebra("A2").algebra, b = corpus_algebra("Kronecker").algebra;
  for (int t = 0; t < 4; ++t) {
    const Correspondence x = random_correspondence(ws, a, b, rng);
    CHECK(ws.k0(ws.compose(ws.identity(b), x)) == ws.k0(x));
    CHECK(ws.k0(ws.compose(x, ws.identity(a))) == ws.k0(x));
  }
}

TEST_CASE("over the ground field classes multiply as numbers") {
  Workspace ws;
  Rng rng(2);
  const auto q = Algebra::field();
  for (int t = 0; t < 5; ++t) {
    const Correspondence x = random_correspondence(ws, q, q, rng), y = random_correspondence(ws, q, q, rng);
    CHECK(ws.k0(ws.compose(y, x))[0] == ws.k0(x)[0] * ws.k0(y)[0]);
  }
}

TEST_CASE("composition is associative on classes") {
  Workspace ws;
  Rng rng(3);
  const auto a = corpus_algebra("A2").algebra, q = Algebra::field(), kr = corpus_algebra("Kronecker").algebra;
  for (int t = 0; t < 3; ++t) {
    const Correspondence x = random_correspondence(ws, a, kr, rng);
    const Correspondence y = random_correspondence(ws, kr, a, rng);
    const Correspondence z = random_correspondence(ws, a, q, rng);
    CHECK(ws.k0(ws.compose(z, ws.compose(y, x))) == ws.k0(ws.compose(ws.compose(z, y), x)));
  }
}

TEST_CASE("traces of identities") {
  Workspace ws;
  CHECK(ws.trace(ws.identity(Algebra::field())) == 1);
  const auto a2 = corpus_algebra("A2").algebra;
  const Rational t = ws.trace(ws.identity(a2));
  CHECK(t == Rational(static_cast<long>(hochschild(a2, diagonal_bimodule(a2)).euler_characteristic())));
  CHECK(t == 2);
  CHECK(ws.trace(scale(ws.identity(a2), Rational(-3, 4))) == Rational(-3, 4) * t);
  const auto kr = corpus_algebra("Kronecker").algebra;
  CHECK_THROWS_AS(ws.trace(simple_correspondence(ws, a2, kr, 0)), AlgebraMismatch);
}

TEST_CASE("chi on simple bimodules is the diagonal of the Euler matrix") {
  Workspace ws;
  CHECK(ws.chi_hom(ws.identity(Algebra::field()), ws.identity(Algebra::field())) == 1);
  for (const char* name : {"QxQ", "A2"}) {
    const auto a = corpus_algebra(name).algebra;
    const PairingMatrix e = euler_matrix(ws.ring(a, a));
    for (std::size_t s = 0; s < e.size(); ++s) {
      const Correspondence x = simple_correspondence(ws, a, a, s);
      CHECK(ws.chi_hom(x, x) == e.values(s, s));
    }
  }
}

TEST_CASE("dualizing twice returns the class") {
  Workspace ws;
  Rng rng(4);
  const auto a = corpus_algebra("A3").algebra, b = corpus_algebra("A2").algebra;
  for (int t = 0; t < 4; ++t) {
    const Correspondence x = random_correspondence(ws, a, b, rng);
    const Correspondence dd = ws.dualize(ws.dualize(x));
    CHECK(same_algebra(dd.source, a));
    CHECK(ws.k0(dd) == ws.k0(x));
  }
}

TEST_CASE("dual of the identity is the inverse dualizing bimodule") {
  Workspace ws;
  // Semisimple: the diagonal is self-dual.
  const auto qq = corpus_algebra("QxQ").algebra;
  CHECK(ws.k0(ws.dualize(ws.identity(qq))) == ws.k0(ws.identity(qq)));
  // A2: the dual of the diagonal is Hom_{A^e}(A, A^e), whose class differs
  // from [A]; it is the inverse of the Serre bimodule DA.
  const auto a2 = corpus_algebra("A2").algebra;
  const Correspondence d = ws.dualize(ws.identity(a2));
  CHECK(ws.k0(d) != ws.k0(ws.identity(a2)));
  const Correspondence da{a2, a2, {{Rational(1), projective_resolution(dual_bimodule_module(a2, ws.ring(a2, a2)))}}};
  CHECK(ws.k0(ws.compose(d, da)) == ws.k0(ws.identity(a2)));
  CHECK(ws.k0(ws.compose(da, d)) == ws.k0(ws.identity(a2)));
}

TEST_CASE("dual of a composite passes through the dual bimodule of the middle algebra") {
  Workspace ws;
  Rng rng(77);
  const auto a = corpus_algebra("A2").algebra, b = corpus_algebra("Kronecker").algebra;
  const auto c = corpus_algebra("A3").algebra;
  const Correspondence db = support::dual_bimodule_correspondence(ws, b);
  std::size_t bare_equal = 0;
  for (int t = 0; t < 4; ++t) {
    const Correspondence x = random_correspondence(ws, a, b, rng), w = random_correspondence(ws, b, c, rng);
    const Correspondence z = random_correspondence(ws, a, c, rng);
    const Correspondence dx = ws.dualize(x), dw = ws.dualize(w);
    CHECK(ws.k0(ws.dualize(ws.compose(w, x))) == ws.k0(ws.compose(dx, ws.compose(db, dw))));
    CHECK(ws.chi_hom(ws.compose(w, x), z) == ws.chi_hom(x, ws.compose(support::right_adjoint(ws, w), z)));
    bare_equal += ws.k0(ws.dualize(ws.compose(w, x))) == ws.k0(ws.compose(dx, dw));
  }
  // Without DB the two sides differ, since B is not semisimple.
  CHECK(bare_equal < 4);
}

TEST_CASE("dualizing preserves the rank of a Hom-space basis") {
  Workspace ws;
  const auto a = corpus_algebra("A2").algebra;
  const HomSpaceModel m = ws.build_hom_model(ws.motive("A2", a), ws.motive("A2", a));
  std::vector<Vector> classes;
  for (const auto& b : m.basis) classes.push_back(ws.k0(ws.dualize(b)));
  CHECK(rank(Matrix::from_columns(classes[0].size(), classes)) == m.basis.size());
}

TEST_CASE("Hom-space models") {
  Workspace ws;
  const auto q = Algebra::field();
  const HomSpaceModel mq = ws.build_hom_model(ws.motive("Q", q), ws.motive("Q", q));
  CHECK(mq.basis.size() == 1);
  CHECK(mq.gram_chi.values == Matrix::identity(1));

  const auto a2 = corpus_algebra("A2").algebra;
  const HomSpaceModel m = ws.build_hom_model(ws.motive("A2", a2), ws.motive("A2", a2));
  CHECK(m.basis.size() == 4);
  const Rational det = determinant(m.gram_chi.values);
  CHECK((det == 1 || det == -1));
  CHECK(m.gram_chi.values == m.gram_int.values);

  const NCMotive p0 = make_motive(ws, "A2 P0", a2, "P0");
  const NCMotive c1 = make_motive(ws, "A2 1-P1", a2, "1-P1");
  CHECK(ws.build_hom_model(p0, ws.motive("A2", a2)).basis.size() == 2);
  CHECK(ws.build_hom_model(p0, c1).basis.size() == 1);
}

TEST_CASE("idempotent specs") {
  Workspace ws;
  const auto a3 = corpus_algebra("A3").algebra;
  for (const char* spec : {"P0", "P2", "1-P1", "id-P0", " 1 - P2 "}) CHECK(ws.is_idempotent(make_motive(ws, spec, a3, spec)));
  CHECK(make_motive(ws, "id", a3, "id").is_identity);
  // P0 o P2 is nonzero because there is a path 0 -> 2.
  CHECK_THROWS_AS(make_motive(ws, "x", a3, "P0+P2"), UnsupportedInput);
  CHECK_THROWS_AS(make_motive(ws, "x", a3, "P"), MalformedInput);
  CHECK_THROWS_AS(make_motive(ws, "x", a3, "Q1"), MalformedInput);
  CHECK_THROWS_AS(make_motive(ws, "x", a3, ""), MalformedInput);
  CHECK_THROWS_AS(make_motive(ws, "x", a3, "P7"), std::out_of_range);
}

TEST_CASE("numerical kernel edge cases") {
  Workspace ws;
  const auto a2 = corpus_algebra("A2").algebra;
  HomSpaceModel m = ws.build_hom_model(ws.motive("A2", a2), ws.motive("A2", a2));
  CHECK(numerical_kernel(m).empty());
  HomSpaceModel zero = m;
  zero.pairing = Matrix(m.basis.size(), m.reverse_basis.size());
  CHECK(numerical_kernel(zero).size() == m.basis.size());
  CHECK(same_span(numerical_kernel(m), kernel_right(m.gram_int), m.basis.size()));
}

TEST_CASE("verification on identity and restricted models") {
  Workspace ws;
  const auto q = Algebra::field();
  const EquivalenceReport rq = verify_equivalence(ws, ws.build_hom_model(ws.motive("Q", q), ws.motive("Q", q)));
  CHECK(rq.pass);
  CHECK(rq.ker_left.empty());
  CHECK(rq.numerical.empty());

  const auto a2 = corpus_algebra("A2").algebra;
  const EquivalenceReport r2 = verify_equivalence(ws, ws.build_hom_model(ws.motive("A2", a2), ws.motive("A2", a2)));
  CHECK(r2.pass);
  CHECK(r2.nondegenerate);
  CHECK(r2.statement.find("both empty") != std::string::npos);

  const auto t = corpus_algebra("A2xKronecker").algebra;
  const HomSpaceModel mt = ws.build_hom_model(make_motive(ws, "P0", t, "P0"), make_motive(ws, "P3", t, "P3"));
  const EquivalenceReport rt = verify_equivalence(ws, mt);
  CHECK(rt.pass);
  CHECK(same_span(rt.ker_left, rt.numerical, mt.basis.size()));
}

TEST_CASE("a redundant spanning set gives equal nonzero kernels") {
  Workspace ws;
  const auto a2 = corpus_algebra("A2").algebra, kr = corpus_algebra("Kronecker").algebra;
  const HomSpaceModel m = ws.build_hom_model(ws.motive("A2", a2), ws.motive("Kronecker", kr));
  Vector coeffs(m.basis.size());
  coeffs[0] = Rational(2);
  coeffs[1] = Rational(-1, 3);
  const HomSpaceModel big = support::with_redundant_element(ws, m, coeffs);
  const EquivalenceReport r = verify_equivalence(ws, big);
  CHECK(r.pass);
  CHECK_FALSE(r.nondegenerate);
  REQUIRE(r.ker_left.size() == 1);
  Vector expected = coeffs;
  expected.push_back(Rational(-1));
  CHECK(same_span(r.ker_left, {expected}, big.basis.size()));
  CHECK(same_span(r.numerical, {expected}, big.basis.size()));
  CHECK(r.statement.find("degenerate") != std::string::npos);
}

}
