#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetforge/jets.hpp"
#include "jetforge/parse.hpp"

namespace jetforge {

// Line-oriented ideal description:
//   field Q           (or: field Fp 5)
//   vars x y
//   gen x^2 - y^3
//   reduced           (optional)
//   translate 1 0     (optional; moves the given point to the origin)
// Blank lines and lines starting with '#' are ignored.
struct ProblemFile {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> vars;
    std::vector<std::string> generator_texts;
    bool reduced = false;
    std::optional<std::vector<Rational>> translate;

    ParseContext parse_context() const { return ParseContext{field, vars}; }
    // Parse the generators (applying the translation) into an AmbientIdeal.
    AmbientIdeal to_ideal() const;
};

struct ProblemFileError : std::runtime_error {
    ProblemFileError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

ProblemFile read_problem_file(std::istream& in);
ProblemFile read_problem_file_path(const std::string& path); // "-" reads stdin

// JSON term-list schema: {"coeff": "<exact string>",
//   "monomial": [{"level": i, "index": j, "exp": e}, ...]}
// Terms are emitted grevlex-descending and monomial entries level-major, so
// serialization is canonical.
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::ordered_json& j, const FieldSpec& field);

nlohmann::ordered_json jet_ideal_to_json(const JetIdeal& jets);

} // namespace jetforge
