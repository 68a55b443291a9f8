#include <doctest.h>

#include "helpers.hpp"

using namespace jetforge;
using namespace jetforge::testing;

TEST_CASE("prime field construction") {
    CHECK_THROWS_AS(FieldSpec::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.normalize(Rational(7)) == Rational(2));
    CHECK(f5.normalize(Rational(-1)) == Rational(4));
    CHECK(f5.normalize(Rational(1, 2)) == Rational(3)); // 2*3 = 1 mod 5
    CHECK(f5.inv(Rational(3)) == Rational(2));
    CHECK_THROWS_AS(f5.inv(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(f5.normalize(Rational(1, 5)), std::domain_error);
}

TEST_CASE("ring arithmetic basics") {
    Poly x = qpoly("x");
    CHECK((x * x) == qpoly("x^2"));
    CHECK((qpoly("x + 1") - qpoly("x + 1")).is_zero());
    CHECK((qpoly("x + 1") - qpoly("x + 1")).terms().empty());

    // Frobenius over F_2: (x + y)^2 = x^2 + y^2.
    Poly s = fppoly("x + y", 2);
    CHECK((s * s) == fppoly("x^2 + y^2", 2));

    CHECK_THROWS_AS(qpoly("x") + fppoly("x", 5), FieldMismatch);
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(20240811);
    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 1000; ++trial) {
            Poly a = random_poly(rng, field, 2, 3, 3);
            Poly b = random_poly(rng, field, 2, 3, 3);
            Poly c = random_poly(rng, field, 2, 3, 3);
            REQUIRE((a + b) == (b + a));
            REQUIRE((a * b) == (b * a));
            REQUIRE(((a + b) + c) == (a + (b + c)));
            REQUIRE(((a * b) * c) == (a * (b * c)));
            REQUIRE((a * (b + c)) == (a * b + a * c));
        }
    }
}

TEST_CASE("ord") {
    CHECK(*qpoly("x^2 - y^3").ord() == 2);
    CHECK(!Poly::zero(FieldSpec::rationals()).ord().has_value());
    // Cusp F_1, from the t-expansion.
    Poly f1 = expand_in_t(qpoly("x^2 - y^3"), 1)[1];
    CHECK(*f1.ord() == 2);
}

TEST_CASE("weight") {
    CHECK(Monomial::var(JetVar{0, 1}, 5).weight() == 0);
    CHECK((Monomial::var(JetVar{1, 1}) * Monomial::var(JetVar{2, 3})).weight() == 3);
    // x_{i,1}^p has weight p*i, the level where F_m = x_{i,1}^p occurs.
    const int p = 3;
    for (int i = 1; i <= 3; ++i) {
        Monomial m = Monomial::var(JetVar{i, 1}, p);
        CHECK(m.weight() == static_cast<long long>(p) * i);
        Poly xp = fppoly("x^3", p, {"x"});
        std::vector<Poly> levels = expand_in_t(xp, p * i);
        CHECK(levels[p * i] == Poly::term(xp.field(), Rational(1), m));
    }
}

TEST_CASE("initial form") {
    CHECK(qpoly("x^2 - y^3").initial_form() == qpoly("x^2"));
    Poly f1 = expand_in_t(qpoly("x^2 - y^3"), 1)[1];
    CHECK(f1.initial_form() == parse_poly("2*x[0][1]*x[1][1]",
                                          ParseContext{FieldSpec::rationals(), {}}));
    Poly hom = qpoly("x^2 + x*y");
    CHECK(hom.initial_form() == hom);
    CHECK_THROWS_AS(Poly::zero(FieldSpec::rationals()).initial_form(), std::domain_error);
}

TEST_CASE("partial derivative") {
    CHECK(qpoly("x^2 - y^3").partial_derivative(JetVar{0, 1}) == qpoly("2*x"));
    CHECK(fppoly("x^5", 5).partial_derivative(JetVar{0, 1}).is_zero());
    CHECK(qpoly("7").partial_derivative(JetVar{0, 1}).is_zero());
}

TEST_CASE("partial derivative matches symbolic difference quotient") {
    // f(v + eps) - f(v) = eps * df/dv + O(eps^2) as a polynomial identity.
    std::mt19937 rng(7);
    const JetVar eps{99, 1};
    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int trial = 0; trial < 50; ++trial) {
            Poly f = random_poly(rng, field, 3, 4, 4);
            JetVar v{0, 1 + trial % 3};
            Poly shifted = f.substitute(
                {{v, Poly::variable(field, v) + Poly::variable(field, eps)}});
            Poly diff = shifted - f -
                        Poly::variable(field, eps) * f.partial_derivative(v);
            for (const auto& [mono, c] : diff.terms())
                REQUIRE(mono.exponent_of(eps) >= 2);
        }
    }
}

TEST_CASE("grevlex order") {
    Monomial x2 = Monomial::var(JetVar{0, 1}, 2);
    Monomial y3 = Monomial::var(JetVar{0, 2}, 3);
    CHECK(grevlex_less(x2, y3)); // degree decides first
    Monomial xy = Monomial::var(JetVar{0, 1}) * Monomial::var(JetVar{0, 2});
    Monomial y2 = Monomial::var(JetVar{0, 2}, 2);
    CHECK(grevlex_less(y2, xy)); // same degree: more weight in the larger var is smaller
    CHECK(!grevlex_less(xy, y2));
    CHECK(!grevlex_less(xy, xy));
    CHECK(qpoly("x^2 - y^3").leading_term().first == y3);
}
