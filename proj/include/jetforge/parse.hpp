#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jetforge/poly.hpp"

namespace jetforge {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

// Naming scheme for parsing: named identifiers become level-0 jet variables
// with index = 1 + position in `ambient_vars`; `x[i][j]` is always accepted.
struct ParseContext {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> ambient_vars;
};

// Grammar: sum of products of powers; `^` takes a nonnegative integer
// literal; rational coefficients written a/b; implicit multiplication and
// division by polynomials are rejected.
Poly parse_poly(const std::string& text, const ParseContext& context);

} // namespace jetforge
