#include <doctest.h>

#include "ncmot/corpus.hpp"
#include "ncmot/errors.hpp"
#include "oracles.hpp"

using namespace ncmot;

TEST_SUITE("algebra") {

TEST_CASE("path algebra dimension equals the number of paths") {
  for (const auto& q : {quiver_a2(), quiver_a3(), quiver_kronecker(), quiver_two_points()}) {
    const auto a = path_algebra(q);
    CHECK(a->dim() == oracle::total_paths(q));
    CHECK(count_paths(q) == oracle::total_paths(q));
    CHECK(a->idempotent_count() == q.vertex_count);
    CHECK(a->is_associative());
  }
  Quiver d4{4, {{0, 1, "a"}, {0, 2, "b"}, {1, 3, "c"}, {2, 3, "d"}}};
  CHECK(path_algebra(d4)->dim() == oracle::total_paths(d4));
}

TEST_CASE("Cartan entries count paths between vertices") {
  for (const auto& q : {quiver_a3(), quiver_kronecker()}) {
    const auto a = path_algebra(q);
    for (std::size_t s = 0; s < q.vertex_count; ++s)
      for (std::size_t t = 0; t < q.vertex_count; ++t) CHECK(a->cartan(s, t) == oracle::paths_between(q, s, t));
  }
}

TEST_CASE("path convention: an arrow i -> j satisfies e_i a e_j = a") {
  const auto a = path_algebra(quiver_a2());
  std::size_t arrow = 0;
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (a->label(b) == "a") arrow = b;
  CHECK(a->left_idempotent(arrow) == 0);
  CHECK(a->right_idempotent(arrow) == 1);
  CHECK(a->is_radical(arrow));
}

TEST_CASE("cyclic quivers and bad arrows are rejected") {
  CHECK_THROWS_AS(path_algebra(Quiver{2, {{0, 1, "a"}, {1, 0, "b"}}}), UnsupportedInput);
  CHECK_THROWS_AS(path_algebra(Quiver{1, {{0, 0, "x"}}}), UnsupportedInput);
  CHECK_THROWS_AS(path_algebra(Quiver{2, {{0, 2, "a"}}}), UnsupportedInput);
  CHECK_THROWS_AS(path_algebra(Quiver{2, {{0, 1, "a"}, {0, 1, "a"}}}), UnsupportedInput);
}

TEST_CASE("non-associative structure constants are rejected") {
  Algebra::Spec spec;
  spec.labels = {"e0", "e1", "x"};
  spec.idempotents = {0, 1};
  spec.products.assign(3, std::vector<Algebra::Element>(3));
  spec.products[0][0] = {{0, Rational(1)}};
  spec.products[1][1] = {{1, Rational(1)}};
  spec.products[0][2] = {{2, Rational(1)}};
  spec.products[2][1] = {{2, Rational(1)}};
  CHECK_NOTHROW(Algebra::create(spec));
  spec.products[2][1] = {{2, Rational(2)}};
  CHECK_THROWS_AS(Algebra::create(spec), UnsupportedInput);
}

TEST_CASE("opposite and tensor constructions") {
  const auto a2 = corpus_algebra("A2").algebra;
  const auto kr = corpus_algebra("Kronecker").algebra;
  CHECK(same_algebra(opposite(opposite(a2)), a2));
  CHECK(same_algebra(opposite(a2), path_algebra(oracle::reversed(quiver_a2()))));
  const auto t = tensor(a2, kr);
  CHECK(t->dim() == a2->dim() * kr->dim());
  CHECK(t->idempotent_count() == 4);
  CHECK(t->is_associative());
  REQUIRE(t->factors());
  CHECK(same_algebra(t->factors()->first, a2));
  const auto env = enveloping(a2);
  CHECK(env->dim() == 9);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t2 = 0; t2 < 2; ++t2)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v)
          CHECK(env->cartan(s * 2 + t2, u * 2 + v) == a2->cartan(u, s) * a2->cartan(t2, v));
}

TEST_CASE("corpus algebras are all present") {
  CHECK(corpus_algebras().size() == 7);
  CHECK(corpus_algebra("Q").algebra->dim() == 1);
  CHECK(corpus_algebra("A2xKronecker").algebra->dim() == 12);
  CHECK_THROWS_AS(corpus_algebra("E8"), std::out_of_range);
}

}
