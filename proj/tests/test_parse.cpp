#include <doctest.h>

#include "helpers.hpp"

using namespace jetforge;
using namespace jetforge::testing;

TEST_CASE("named variables map to level 0") {
    Poly p = qpoly("x^2 - y^3", {"x", "y"});
    Poly expected = Poly::term(FieldSpec::rationals(), Rational(1),
                               Monomial::var(JetVar{0, 1}, 2)) -
                    Poly::term(FieldSpec::rationals(), Rational(1),
                               Monomial::var(JetVar{0, 2}, 3));
    CHECK(p == expected);
}

TEST_CASE("explicit jet variables") {
    Poly p = parse_poly("x[1][1]*x[0][1]", ParseContext{FieldSpec::rationals(), {}});
    Monomial m = Monomial::var(JetVar{1, 1}) * Monomial::var(JetVar{0, 1});
    CHECK(p == Poly::term(FieldSpec::rationals(), Rational(1), m));
}

TEST_CASE("rational coefficients and parentheses") {
    CHECK(qpoly("1/2*x + 1/2*x") == qpoly("x"));
    CHECK(qpoly("(x + y)^2") == qpoly("x^2 + 2*x*y + y^2"));
    CHECK(qpoly("-x + x").is_zero());
    CHECK(fppoly("6*x", 5) == fppoly("x", 5));
}

TEST_CASE("syntax errors carry positions") {
    ParseContext ctx{FieldSpec::rationals(), {"x", "y"}};
    CHECK_THROWS_AS(parse_poly("x^(-1)", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("x + ", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("2x", ctx), ParseError); // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x/2", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("w + 1", ctx), ParseError); // unknown variable
    try {
        parse_poly("x + @", ctx);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("jet variable index bounds") {
    ParseContext ctx{FieldSpec::rationals(), {"x", "y"}};
    CHECK_THROWS_AS(parse_poly("x[1][3]", ctx), ParseError); // exceeds ambient dim
    CHECK_THROWS_AS(parse_poly("x[0][0]", ctx), ParseError); // index must be >= 1
    CHECK_NOTHROW(parse_poly("x[4][2]", ctx));
}
