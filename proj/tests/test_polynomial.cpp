#include "qtrefftz/polynomial.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace qt;
using namespace qt::testing;

TEST_CASE("derivative") {
  CHECK(derivative(hpoly(2, 2, {{{2, 0}, 1}}), MultiIndex{1, 0}) == hpoly(2, 1, {{{1, 0}, 2}}));
  CHECK(derivative(hpoly(2, 2, {{{1, 1}, 1}}), MultiIndex{2, 0}).is_zero());
  CHECK(derivative(hpoly(2, 4, {{{2, 2}, 1}}), MultiIndex{1, 1}) == hpoly(2, 2, {{{1, 1}, 4}}));
  CHECK(derivative(hpoly(2, 1, {{{1, 0}, 1}}), MultiIndex{2, 0}).is_zero());
}

TEST_CASE("graded_derivative") {
  const auto p = poly(2, {{{0, 0}, 1}, {{2, 0}, 1}});
  CHECK(graded_derivative(p, MultiIndex{1, 0}) == poly(2, {{{1, 0}, 2}}));
  CHECK(graded_derivative(p, MultiIndex{0, 0}) == p);
  CHECK(graded_derivative(poly(2, {{{3, 0}, 1}, {{0, 1}, 1}}), MultiIndex{0, 2}).is_zero());
}

TEST_CASE("taylor_truncate") {
  const auto p = poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{3, 0}, 1}});
  CHECK(taylor_truncate(p, 2) == poly(2, {{{0, 0}, 1}, {{1, 0}, 1}}));
  CHECK(taylor_truncate(p, 3) == p);
  CHECK(taylor_truncate(poly(2, {{{3, 0}, 1}}), 0).is_zero());
}

TEST_CASE("homogeneous_product") {
  CHECK(homogeneous_product(hpoly(2, 1, {{{1, 0}, 1}}), hpoly(2, 1, {{{0, 1}, 1}})) ==
        hpoly(2, 2, {{{1, 1}, 1}}));
  const auto p = hpoly(2, 3, {{{1, 2}, 3}, {{3, 0}, Q(-1, 2)}});
  CHECK(homogeneous_product(hpoly(2, 0, {{{0, 0}, 1}}), p) == p);
  CHECK(homogeneous_product(hpoly(2, 1, {{{1, 0}, 1}, {{0, 1}, 1}}),
                            hpoly(2, 1, {{{1, 0}, 1}, {{0, 1}, -1}})) ==
        hpoly(2, 2, {{{2, 0}, 1}, {{0, 2}, -1}}));
}

TEST_CASE("apolar_pairing") {
  CHECK(apolar_pairing(hpoly(2, 2, {{{2, 0}, 1}}), hpoly(2, 2, {{{2, 0}, 1}})) == 2);
  CHECK(apolar_pairing(hpoly(2, 2, {{{1, 1}, 1}}), hpoly(2, 2, {{{2, 0}, 1}})) == 0);
  const auto h = hpoly(2, 2, {{{2, 0}, 1}, {{0, 2}, -1}});
  CHECK(apolar_pairing(h, h) == 4);
  CHECK(apolar_pairing(hpoly(2, 1, {{{1, 0}, 1}}), h) == 0);
}

TEST_CASE("apolar_pairing conjugates the second argument") {
  HomogeneousPoly<Complex> p(1, 1);
  p.add_term(MultiIndex{1}, Complex(0, 1));
  CHECK(apolar_pairing(p, p) == Complex(1, 0));
}

TEST_CASE("zero coefficients are never stored") {
  HomogeneousPoly<Q> p(2, 1);
  p.add_term(MultiIndex{1, 0}, 3);
  p.add_term(MultiIndex{1, 0}, -3);
  p.add_term(MultiIndex{0, 1}, 0);
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term(MultiIndex{1, 1}, 1), std::invalid_argument);

  GradedPoly<Q> g = poly(2, {{{2, 0}, 1}, {{0, 0}, 1}});
  g.add_term(MultiIndex{2, 0}, -1);
  CHECK(g.degree() == 0);
  g.set_component(0, HomogeneousPoly<Q>(2, 0));
  CHECK(g.is_zero());
}

TEST_CASE("float normalization drops relative noise") {
  GradedPoly<Complex> g(2);
  g.add_term(MultiIndex{1, 0}, Complex(1.0, 0));
  g.add_term(MultiIndex{0, 3}, Complex(1e-15, 0));
  g.normalize();
  CHECK(g.term_count() == 1);
  CHECK(g.degree() == 1);
}

TEST_CASE("apolar pairing is positive definite") {
  Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = g.homogeneous(g.integer(1, 3), g.integer(0, 4));
    if (p.is_zero()) continue;
    CHECK(apolar_pairing(p, p) > 0);
  }
}

TEST_CASE("apolar adjunction <P, Q(d)R> == <P conj(Q), R>") {
  Gen g(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = g.integer(1, 3);
    const unsigned b = g.integer(0, 3);
    const unsigned c = b + g.integer(0, 2);
    const auto q = g.homogeneous(d, b);
    const auto r = g.homogeneous(d, c);
    const auto p = g.homogeneous(d, c - b);
    HomogeneousPoly<Q> qr(d, c - b);
    for (const auto& [i, a] : q.terms()) qr += a * derivative(r, i);
    CHECK(apolar_pairing(p, qr) == apolar_pairing(homogeneous_product(p, q), r));
  }
}

TEST_CASE("derivatives compose") {
  Gen g(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = g.integer(1, 3);
    const auto p = g.homogeneous(d, g.integer(0, 5));
    const MultiIndex i = g.multiindex(d, g.integer(0, 2));
    const MultiIndex j = g.multiindex(d, g.integer(0, 2));
    CHECK(derivative(derivative(p, i), j) == derivative(p, i + j));
  }
}

TEST_CASE("taylor_truncate is a projection") {
  Gen g(24);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = g.integer(1, 3);
    const auto p = g.graded(d, 5);
    const unsigned k = g.integer(0, 6);
    const auto t = taylor_truncate(p, k);
    CHECK(taylor_truncate(t, k) == t);
    CHECK(t + (p - t) == p);
    CHECK(t.degree() <= k);
  }
}

TEST_CASE("flatten uses graded-lex positions") {
  const auto p = poly(2, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 2}, 3}});
  const auto v = p.flatten(2);
  REQUIRE(v.size() == 6);
  CHECK(v == std::vector<Q>{1, 0, 2, 3, 0, 0});
  CHECK_THROWS(p.flatten(1));
}
