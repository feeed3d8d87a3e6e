#include "doctest.h"
#include "helpers.hpp"
#include "riordan/errors.hpp"
#include "riordan/series_expr.hpp"

using namespace riordan;

TEST_CASE("basic expressions") {
  CHECK(parse_series("1+x", 4).coefficient(1) == Rational(1));
  CHECK(parse_series("2*x^3", 4).coefficient(3) == Rational(2));
  CHECK(parse_series("-x", 4).coefficient(1) == Rational(-1));
  CHECK(parse_series("(1+x)*(1-x)", 4) == parse_series("1-x^2", 4));
}

TEST_CASE("precedence and powers") {
  CHECK(parse_series("1+2*x^2", 5) == parse_series("1+(2*(x^2))", 5));
  // negative power means reciprocal
  CHECK(parse_series("(1-x)^-1", 6) == parse_series("1/(1-x)", 6));
  CHECK(parse_series("x^2/(1-x)", 6).coefficient(5) == Rational(1));
}

TEST_CASE("functions") {
  CHECK(parse_series("revert(x/(1+x))", 8) == parse_series("x/(1-x)", 8));
  CHECK(parse_series("compose(1/(1-x), x/(1-x))", 8) ==
        parse_series("(1-x)/(1-2*x)", 8));
  CHECK(parse_series("exp(log(1+x))", 8) == parse_series("1+x", 8));
  CHECK(parse_series("deriv(x^3)", 4).coefficient(2) == Rational(3));
  CHECK(parse_series("integral(3*x^2)", 4).coefficient(3) == Rational(1));
  CHECK(parse_series("aerate(1/(1-x))", 6) == parse_series("1/(1-x^2)", 6));
  CHECK(parse_series("sqrt(1+x)^2", 9) == parse_series("1+x", 9));
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_series("1+", 4), ParseError);
  CHECK_THROWS_AS(parse_series("foo(x)", 4), ParseError);
  CHECK_THROWS_AS(parse_series("(1+x", 4), ParseError);
  CHECK_THROWS_AS(parse_series("compose(x)", 4), ParseError);
  try {
    parse_series("1+*x", 8);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("whitespace is ignored") {
  CHECK(parse_series(" 1 / ( 1 - x )", 5) == parse_series("1/(1-x)", 5));
}
