#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "jetforge/problem.hpp"

using namespace jetforge;
using namespace jetforge::testing;

TEST_CASE("read a rational problem file") {
    std::istringstream in(
        "# the cusp\n"
        "field Q\n"
        "vars x y\n"
        "\n"
        "gen x^2 - y^3\n");
    ProblemFile pf = read_problem_file(in);
    CHECK(pf.field.characteristic() == 0);
    CHECK(pf.vars == std::vector<std::string>{"x", "y"});
    CHECK(!pf.reduced);
    AmbientIdeal ideal = pf.to_ideal();
    CHECK(ideal.ambient_dim == 2);
    REQUIRE(ideal.generators.size() == 1);
    CHECK(ideal.generators[0] == qpoly("x^2 - y^3", {"x", "y"}));
}

TEST_CASE("read a prime-field problem file with the reduced flag") {
    std::istringstream in(
        "field Fp 5\n"
        "vars x y\n"
        "gen x*y\n"
        "reduced\n");
    ProblemFile pf = read_problem_file(in);
    CHECK(pf.field.characteristic() == 5);
    CHECK(pf.reduced);
    CHECK(pf.to_ideal().generators[0] == fppoly("x*y", 5, {"x", "y"}));
}

TEST_CASE("translation moves the named point to the origin") {
    std::istringstream in(
        "field Q\n"
        "vars x y\n"
        "gen x^2 + y^2 - 1\n"
        "translate 1 0\n");
    ProblemFile pf = read_problem_file(in);
    AmbientIdeal ideal = pf.to_ideal();
    // x |-> x + 1, y |-> y: the unit circle through (1,0) becomes
    // x^2 + 2x + y^2, which vanishes at the origin.
    CHECK(ideal.generators[0] == qpoly("x^2 + 2*x + y^2", {"x", "y"}));
}

TEST_CASE("problem file errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_problem_file(in);
            FAIL("expected ProblemFileError for: ", text);
        } catch (const ProblemFileError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("vars x\n", 1);                            // field must come first
    expect_error("field Q\ngen x\n", 2);                    // vars before gen
    expect_error("field Fp 6\nvars x\ngen x\n", 1);         // 6 is not prime
    expect_error("field Q\nvars x\nbogus\n", 3);            // unknown directive
    expect_error("field Q\nvars x y\ngen x^2 - w\n", 3);    // parse error in gen
    expect_error("field Q\nvars x y\ngen x\ntranslate 1\n", 4); // arity mismatch
    {
        std::istringstream empty("# nothing\n");
        CHECK_THROWS_AS(read_problem_file(empty), ProblemFileError); // no field line
    }
}

TEST_CASE("polynomial JSON round trip is canonical") {
    std::mt19937 rng(640);
    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int trial = 0; trial < 25; ++trial) {
            Poly p = random_poly(rng, field, 3, 4, 5);
            nlohmann::ordered_json j = poly_to_json(p);
            Poly back = poly_from_json(j, field);
            REQUIRE(back == p);
            // Byte-identical re-serialization.
            REQUIRE(poly_to_json(back).dump() == j.dump());
        }
    }
    // Exact rationals survive as strings.
    Poly half = qpoly("1/2*x + 7/3*y^4", {"x", "y"});
    CHECK(poly_from_json(poly_to_json(half), FieldSpec::rationals()) == half);
}

TEST_CASE("jet ideal JSON") {
    AmbientIdeal cusp =
        ideal_of(FieldSpec::rationals(), 2, {qpoly("x^2 - y^3", {"x", "y"})});
    JetIdeal jets = jetify(cusp, 1);
    nlohmann::ordered_json j = jet_ideal_to_json(jets);
    CHECK(j["m"] == 1);
    CHECK(j["ambient_dim"] == 2);
    REQUIRE(j["generators"].size() == 2);
    CHECK(j["generators"][0]["level"] == 0);
    CHECK(j["generators"][1]["source_generator"] == 0);
    Poly f1 = poly_from_json(j["generators"][1]["poly"], cusp.field);
    CHECK(f1 == jets.at(0, 1));
    // Dumping twice is byte-identical.
    CHECK(jet_ideal_to_json(jets).dump() == j.dump());
}

TEST_CASE("stdin path marker") {
    CHECK_THROWS(read_problem_file_path("/nonexistent/problem.txt"));
}
