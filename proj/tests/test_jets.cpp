#include <doctest.h>

#include "helpers.hpp"

using namespace jetforge;
using namespace jetforge::testing;

namespace {

AmbientIdeal cusp() {
    return ideal_of(FieldSpec::rationals(), 2, {qpoly("x^2 - y^3", {"x", "y"})});
}

Poly jexpr(const std::string& text, const FieldSpec& field = FieldSpec::rationals()) {
    return parse_poly(text, ParseContext{field, {}});
}

} // namespace

TEST_CASE("jetify the cusp at m = 1") {
    JetIdeal jets = jetify(cusp(), 1);
    REQUIRE(jets.generators.size() == 2);
    CHECK(jets.at(0, 0) == jexpr("x[0][1]^2 - x[0][2]^3"));
    CHECK(jets.at(0, 1) == jexpr("2*x[0][1]*x[1][1] - 3*x[0][2]^2*x[1][2]"));
}

TEST_CASE("jetify Example-style Frobenius ideal") {
    // (x^p) over F_p at m = pq + r: generators x_{0,1}^p, ..., x_{q,1}^p with
    // all other levels reported zero.
    const int p = 3, q = 2, r = 1;
    FieldSpec fp = FieldSpec::prime_field(p);
    AmbientIdeal ideal = ideal_of(fp, 1, {fppoly("x^3", p, {"x"})});
    JetIdeal jets = jetify(ideal, p * q + r);
    int nonzero = 0;
    for (const auto& g : jets.generators) {
        if (g.is_zero()) continue;
        ++nonzero;
        REQUIRE(g.level % p == 0);
        CHECK(g.poly == Poly::term(fp, Rational(1), Monomial::var(JetVar{g.level / p, 1}, p)));
    }
    CHECK(nonzero == q + 1);
}

TEST_CASE("jetify the zero ideal") {
    AmbientIdeal a2 = ideal_of(FieldSpec::rationals(), 2, {});
    JetIdeal jets = jetify(a2, 4);
    CHECK(jets.generators.empty());
    CHECK(jets.is_zero_ideal());
}

TEST_CASE("prefix compatibility of jet generators") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = random_poly(rng, FieldSpec::rationals(), 2, 3, 3, true);
        AmbientIdeal ideal = ideal_of(FieldSpec::rationals(), 2, {f});
        JetIdeal small = jetify(ideal, 2);
        JetIdeal big = jetify(ideal, 5);
        for (int i = 0; i <= 2; ++i) REQUIRE(small.at(0, i) == big.at(0, i));
    }
}

TEST_CASE("evaluation consistency: jetify vs truncated-series residuals") {
    std::mt19937 rng(77);
    AmbientIdeal ideal = cusp();
    JetIdeal jets = jetify(ideal, 3);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        JetPoint p;
        p.ambient_dim = 2;
        p.m = 3;
        for (int i = 0; i <= 3; ++i)
            for (int j = 1; j <= 2; ++j) {
                int c = coord(rng);
                if (c) p.coordinates.emplace(JetVar{i, j}, Rational(c));
            }
        // On X_m iff the t-series evaluation kills the generator mod t^{m+1},
        // iff every F_i vanishes at the point.
        auto residuals = jet_residuals(ideal, p);
        bool on_scheme = true;
        for (const auto& g : jets.generators) {
            Rational v = g.poly.evaluate([&](JetVar var) { return p.coordinate(var); });
            REQUIRE(v == residuals[g.source_generator][g.level]);
            if (v != 0) on_scheme = false;
        }
        REQUIRE(on_scheme == lies_on_jet_scheme(ideal, p));
    }
}

TEST_CASE("truncate_point") {
    AmbientIdeal ideal = cusp();
    JetPoint jet;
    jet.ambient_dim = 2;
    jet.m = 1;
    jet.coordinates.emplace(JetVar{1, 2}, Rational(7)); // (0,0) + t*(0,7)
    REQUIRE(lies_on_jet_scheme(ideal, jet));
    JetPoint base = truncate_point(ideal, jet, 0);
    CHECK(base.coordinates.empty()); // origin
    CHECK(base.m == 0);

    JetPoint same = truncate_point(ideal, jet, 1);
    CHECK(same.coordinates == jet.coordinates);

    JetPoint off = jet;
    off.coordinates.emplace(JetVar{0, 1}, Rational(1));
    CHECK_THROWS_AS(truncate_point(ideal, off, 0), std::invalid_argument);
}

TEST_CASE("trivial jet") {
    AmbientIdeal ideal = cusp();
    JetPoint origin2 = trivial_jet(ideal, {Rational(0), Rational(0)}, 2);
    CHECK(origin2.coordinates.empty());
    CHECK(lies_on_jet_scheme(ideal, origin2));

    // A point of X = V(x - y^2) embeds with zero higher levels and the
    // section property holds: truncating back to level 0 returns the point.
    AmbientIdeal graph = ideal_of(FieldSpec::rationals(), 2, {qpoly("x - y^2", {"x", "y"})});
    JetPoint j = trivial_jet(graph, {Rational(4), Rational(2)}, 3);
    CHECK(lies_on_jet_scheme(graph, j));
    JetPoint back = truncate_point(graph, j, 0);
    CHECK(back.coordinate(JetVar{0, 1}) == Rational(4));
    CHECK(back.coordinate(JetVar{0, 2}) == Rational(2));

    CHECK_THROWS_AS(trivial_jet(ideal, {Rational(1), Rational(2)}, 2),
                    std::invalid_argument);
}

TEST_CASE("fiber over the trivial jet") {
    AmbientIdeal ideal = cusp();
    FiberIdeal f01 = fiber_over_trivial_jet(ideal, 0, 1);
    CHECK(f01.all_zero());

    FiberIdeal f02 = fiber_over_trivial_jet(ideal, 0, 2);
    REQUIRE(f02.generators.size() == 2);
    CHECK(f02.generators[0].is_zero()); // level 1
    CHECK(f02.generators[1].poly == jexpr("x[1][1]^2"));

    AmbientIdeal a3 = ideal_of(FieldSpec::rationals(), 3, {});
    CHECK(fiber_over_trivial_jet(a3, 1, 3).generators.empty());
}

TEST_CASE("jet of a morphism") {
    FieldSpec q = FieldSpec::rationals();
    // Identity on A^2: component (q, i) = x_{i,q}.
    std::vector<Poly> identity{Poly::variable(q, JetVar{0, 1}), Poly::variable(q, JetVar{0, 2})};
    auto jid = jet_of_morphism(identity, 2);
    for (int comp = 0; comp < 2; ++comp)
        for (int i = 0; i <= 2; ++i)
            CHECK(jid[comp][i] == Poly::variable(q, JetVar{i, comp + 1}));

    // Squaring map on A^1 at m = 1.
    std::vector<Poly> sq{qpoly("x^2", {"x"})};
    auto jsq = jet_of_morphism(sq, 1);
    CHECK(jsq[0][0] == jexpr("x[0][1]^2"));
    CHECK(jsq[0][1] == jexpr("2*x[0][1]*x[1][1]"));
}

TEST_CASE("jet morphisms commute with projection and composition") {
    std::mt19937 rng(404);
    FieldSpec field = FieldSpec::rationals();
    std::vector<Poly> f{qpoly("x^2 + y", {"x", "y"}), qpoly("x*y", {"x", "y"})};
    std::vector<Poly> g{qpoly("x - y^2", {"x", "y"}), qpoly("y", {"x", "y"})};
    auto fm = jet_of_morphism(f, 2);
    auto gm = jet_of_morphism(g, 2);
    // g o f componentwise: substitute f into g.
    std::map<JetVar, Poly> sub{{JetVar{0, 1}, f[0]}, {JetVar{0, 2}, f[1]}};
    std::vector<Poly> gof{g[0].substitute(sub), g[1].substitute(sub)};
    auto gofm = jet_of_morphism(gof, 2);

    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        JetPoint p;
        p.ambient_dim = 2;
        p.m = 2;
        for (int i = 0; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                int c = coord(rng);
                if (c) p.coordinates.emplace(JetVar{i, j}, Rational(c));
            }
        JetPoint fp = apply_jet_morphism(fm, p);
        // pi_m o f_m = f o pi_m: level-0 coordinates of the image are f(pi(p)).
        for (int comp = 0; comp < 2; ++comp) {
            Rational direct = f[comp].evaluate(
                [&](JetVar v) { return p.coordinate(JetVar{0, v.index}); });
            REQUIRE(fp.coordinate(JetVar{0, comp + 1}) == direct);
        }
        // (g o f)_m = g_m o f_m pointwise.
        JetPoint lhs = apply_jet_morphism(gofm, p);
        JetPoint rhs = apply_jet_morphism(gm, fp);
        REQUIRE(lhs.coordinates == rhs.coordinates);
    }
}
