#include "qtrefftz/json_io.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace qt;
using namespace qt::testing;
using io::json;

TEST_CASE("multi-indices are plain arrays") {
  CHECK(io::to_json(MultiIndex{2, 0, 1}) == json::parse("[2,0,1]"));
  CHECK(io::multiindex_from_json(json::parse("[2,0,1]"), 3) == MultiIndex{2, 0, 1});
  CHECK_THROWS_AS(io::multiindex_from_json(json::parse("[2,0]"), 3), io::ParseError);
  CHECK_THROWS_AS(io::multiindex_from_json(json::parse("[2,-1]"), 2), io::ParseError);
  CHECK_THROWS_AS(io::multiindex_from_json(json::parse("[2,0.5]"), 2), io::ParseError);
}

TEST_CASE("exact polynomial document") {
  const auto p = poly(2, {{{0, 0}, Q(-3, 4)}, {{2, 1}, 5}});
  const json j = io::to_json(p);
  CHECK(j == json::parse(R"({"dimension":2,"center":[0.0,0.0],"terms":[
      {"i":[0,0],"re":"-3/4","im":"0/1"},{"i":[2,1],"re":"5/1","im":"0/1"}]})"));
  CHECK(io::poly_from_json<Q>(j) == p);
}

TEST_CASE("readers accept numbers and strings") {
  const json j = json::parse(R"({"dimension":1,"terms":[{"i":[1],"re":0.5},{"i":[0],"re":"2","im":0}]})");
  CHECK(io::poly_from_json<Q>(j) == poly(1, {{{1}, Q(1, 2)}, {{0}, 2}}));
  const auto f = io::poly_from_json<Complex>(j);
  CHECK(f.coefficient(MultiIndex{1}) == Complex(0.5, 0));
  const json c = json::parse(R"({"dimension":1,"terms":[{"i":[1],"re":"1/3","im":2}]})");
  CHECK(io::poly_from_json<Complex>(c).coefficient(MultiIndex{1}) == Complex(1.0 / 3.0, 2.0));
  CHECK_THROWS_AS(io::poly_from_json<Q>(c), io::ParseError);
}

TEST_CASE("malformed polynomials are rejected") {
  CHECK_THROWS_AS(io::poly_from_json<Q>(json::parse(R"({"terms":[]})")), io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json<Q>(json::parse(R"({"dimension":2,"terms":[{"i":[1,0],"re":"1/0"}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json<Q>(json::parse(R"({"dimension":2,"terms":[{"i":[1,0],"re":"x"}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json<Q>(json::parse(R"({"dimension":2,"center":[1],"terms":[]})")),
                  io::ParseError);
}

TEST_CASE("operator documents round-trip") {
  Gen g(71);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = g.integer(1, 3);
    const unsigned order = g.integer(1, 3);
    const auto op = g.op(d, order, order + g.integer(0, 3), g.coin(0.5));
    const json j = io::to_json(op);
    const auto back = io::operator_from_json<Q>(j);
    CHECK(io::to_json(back) == j);
    CHECK(back.coefficients() == op.coefficients());
    CHECK(io::to_json(io::operator_from_json<Q>(json::parse(j.dump()))).dump() == j.dump());
  }
}

TEST_CASE("operator document layout") {
  const json j = io::to_json(helmholtz(2, 2));
  CHECK(j.at("dimension") == 2);
  CHECK(j.at("order") == 2);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("coefficients").size() == 3);
  CHECK(j.at("coefficients")[0] == json::parse(R"({"j":[0,0],"taylor":[{"k":[0,0],"re":"1/1","im":"0/1"}]})"));
  CHECK_THROWS_AS(io::operator_from_json<Q>(json::parse(R"({"dimension":2,"order":2})")), io::ParseError);
}

TEST_CASE("basis and report documents") {
  const auto b = quasi_trefftz_basis(laplace(2, 2));
  const json j = io::to_json(b);
  CHECK(j.at("elements").size() == 5);
  CHECK(j.at("seeds").size() == 5);
  CHECK(j.at("operator") == io::to_json(b.op));
  CHECK(io::basis_elements_from_json<Q>(j) == b.elements);

  const VerificationReport r{2.0, false, 2, 2};
  CHECK(io::to_json(r) == json::parse(R"({"residual":2.0,"pass":false,"p":2,"gamma":2})"));
}
