#pragma once

#include <random>
#include <string>
#include <vector>

#include "jetforge/jets.hpp"
#include "jetforge/parse.hpp"
#include "jetforge/series.hpp"

namespace jetforge::testing {

inline Poly qpoly(const std::string& text,
                  const std::vector<std::string>& vars = {"x", "y", "z"}) {
    return parse_poly(text, ParseContext{FieldSpec::rationals(), vars});
}

inline Poly fppoly(const std::string& text, std::int64_t p,
                   const std::vector<std::string>& vars = {"x", "y", "z"}) {
    return parse_poly(text, ParseContext{FieldSpec::prime_field(p), vars});
}

inline AmbientIdeal ideal_of(const FieldSpec& field, int n, const std::vector<Poly>& gens) {
    AmbientIdeal ideal;
    ideal.field = field;
    ideal.ambient_dim = n;
    ideal.generators = gens;
    ideal.validate();
    return ideal;
}

// Independent oracle for expand_in_t: substitute x_{0,j} -> sum_i x_{i,j} t^i
// term by term and multiply everything out with plain distributive products,
// tracking the t-degree as a vector index with no truncation tricks.
inline std::vector<Poly> naive_expand(const Poly& f, int m) {
    const FieldSpec& field = f.field();
    std::vector<Poly> acc(static_cast<std::size_t>(m) + 1, Poly::zero(field));
    for (const auto& [mono, c] : f.terms()) {
        std::vector<Poly> prod{Poly::constant(field, c)};
        for (const auto& [v, e] : mono.exponents()) {
            for (int rep = 0; rep < e; ++rep) {
                std::vector<Poly> next(prod.size() + m, Poly::zero(field));
                for (std::size_t a = 0; a < prod.size(); ++a)
                    for (int i = 0; i <= m; ++i)
                        next[a + i] += prod[a] * Poly::variable(field, JetVar{i, v.index});
                prod = std::move(next);
            }
        }
        for (std::size_t i = 0; i < prod.size() && i <= static_cast<std::size_t>(m); ++i)
            acc[i] += prod[i];
    }
    return acc;
}

// Random sparse level-0 polynomial; never returns the zero polynomial unless
// max_terms == 0.
inline Poly random_poly(std::mt19937& rng, const FieldSpec& field, int nvars, int max_degree,
                        int max_terms, bool no_constant = false) {
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    std::uniform_int_distribution<int> var_dist(1, nvars);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    Poly p = Poly::zero(field);
    int terms = terms_dist(rng);
    for (int t = 0; t < terms; ++t) {
        std::uniform_int_distribution<int> deg_dist(no_constant ? 1 : 0, max_degree);
        int deg = deg_dist(rng);
        Monomial m;
        for (int k = 0; k < deg; ++k) m = m * Monomial::var(JetVar{0, var_dist(rng)});
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        p += Poly::term(field, Rational(c), m);
    }
    if (p.is_zero() && max_terms > 0)
        p = Poly::variable(field, JetVar{0, 1});
    return p;
}

} // namespace jetforge::testing
