#include "doctest.h"
#include "invsys/parse.hpp"

using namespace invsys;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("expressions") {
  const auto ex1 = parse_polynomial("X^3*Y*Z^4*T*U^2*V^6*(X^2*Y*Z*T^2*U - V^7)");
  CHECK(ex1.variables == std::vector<std::string>{"X", "Y", "Z", "T", "U", "V"});
  CHECK(ex1.poly.term_count() == 2);
  CHECK(ex1.poly.homogeneous_degree() == 24);

  const auto p = parse_polynomial("x1^2x2 - x1x2^2");
  CHECK(p.variables == std::vector<std::string>{"x1", "x2"});
  CHECK(p.poly.coefficient({2, 1}).is_one());
  CHECK(p.poly.coefficient({1, 2}) == scalar_from_integer(Q, -1));
}

TEST_CASE("juxtaposition, signs and unicode operators") {
  CHECK(parse_polynomial("YZ").poly.coefficient({1, 1}).is_one());
  CHECK(parse_polynomial("-x + y").poly == parse_polynomial("y - x").poly.remap(2, {1, 0}));
  CHECK(parse_polynomial("2(x + y)^2").poly == parse_polynomial("2x^2 + 4xy + 2y^2").poly);
  CHECK(parse_polynomial("x·y − y^2").poly == parse_polynomial("x*y - y^2").poly);
  CHECK(parse_polynomial("3 x 4").poly == parse_polynomial("12x").poly);
}

TEST_CASE("pinned variable order") {
  const std::vector<std::string> vars{"z", "y", "x"};
  const auto p = parse_polynomial("x^2 y", Q, vars);
  CHECK(p.variables == vars);
  CHECK(p.poly.coefficient({0, 1, 2}).is_one());
  CHECK_THROWS_AS(parse_polynomial("w", Q, vars), UnknownVariable);
}

TEST_CASE("prime fields reduce coefficients") {
  const auto p = parse_polynomial("3x + 5y", FieldSpec::prime(3));
  CHECK(p.poly.term_count() == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_polynomial("x^(2)"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x^-2"), NegativeExponent);
  CHECK_THROWS_AS(parse_polynomial("x +"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("(x + y"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x $ y"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial(""), SyntaxError);
  try {
    parse_polynomial("x + ?");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("ideals and variable lists") {
  const auto I = parse_ideal("x^2; y^2; xz");
  CHECK(I.generators.size() == 3);
  CHECK(I.variables == std::vector<std::string>{"x", "y", "z"});
  for (const auto& g : I.generators) CHECK(g.nvars() == 3);
  CHECK(parse_variable_list("x,y, z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_variable_list("X1 X2") == std::vector<std::string>{"X1", "X2"});
  CHECK_THROWS(parse_variable_list("x,2y"));
}
