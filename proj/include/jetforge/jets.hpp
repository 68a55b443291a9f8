#pragma once

#include <map>
#include <vector>

#include "jetforge/series.hpp"

namespace jetforge {

// The defining ideal of X inside A^N, generated by level-0 polynomials.
struct AmbientIdeal {
    FieldSpec field = FieldSpec::rationals();
    int ambient_dim = 0; // N
    std::vector<Poly> generators;

    // Validates level-0 generators with indices <= N; zero generators rejected
    // (an empty list means X = A^N).
    void validate() const;
    bool is_zero_ideal() const { return generators.empty(); }
};

// One jet-ideal generator F_{g,i}; zero polynomials are kept and flagged so
// vanishing levels (possible in char p) stay visible.
struct JetGenerator {
    int source_generator = 0;
    int level = 0;
    Poly poly;

    bool is_zero() const { return poly.is_zero(); }
};

// The ideal of X_m in A^{N(m+1)}: F_{g,i} = expand_in_t(gen g, m)[i],
// ordered by (generator index, level).
struct JetIdeal {
    AmbientIdeal base;
    int m = 0;
    std::vector<JetGenerator> generators;

    const Poly& at(int source_generator, int level) const;
    std::vector<Poly> nonzero_polys() const;
    bool is_zero_ideal() const;
};

// A k-rational point of the (N, m) jet grid; absent coordinates are zero.
struct JetPoint {
    int ambient_dim = 0;
    int m = 0;
    std::map<JetVar, Rational> coordinates;

    Rational coordinate(JetVar v) const;
};

JetIdeal jetify(const AmbientIdeal& ideal, int m);

// Residuals of the generators under direct truncated t-series evaluation at
// the point: result[g][i] is the t^i coefficient of gen_g(sum_i p_i t^i).
// This is an independent oracle for jetify.
std::vector<std::vector<Rational>> jet_residuals(const AmbientIdeal& ideal, const JetPoint& p);

bool lies_on_jet_scheme(const AmbientIdeal& ideal, const JetPoint& p);

// Restriction of a point of X_{m'} to levels <= m; throws if the input does
// not satisfy the order-m' jet equations.
JetPoint truncate_point(const AmbientIdeal& ideal, const JetPoint& p, int m);

// The trivial m-jet at a point x of X (all positive levels zero); throws if
// some generator does not vanish at x.
JetPoint trivial_jet(const AmbientIdeal& ideal, const std::vector<Rational>& x, int m);

// Generators of the fiber of psi_{m',m} over the trivial m-jet: each F_{g,i}
// with m < i <= m' and all variables of level <= m set to zero. Zero results
// are retained so callers can detect the free fiber A^{N(m'-m)}.
struct FiberIdeal {
    int m = 0;
    int m_prime = 0;
    std::vector<JetGenerator> generators;

    bool all_zero() const;
};

FiberIdeal fiber_over_trivial_jet(const AmbientIdeal& ideal, int m, int m_prime);

// The induced morphism on jets of f: A^N -> A^P given by component
// polynomials: component (q, i) of the result is expand_in_t(f_q, m)[i].
std::vector<std::vector<Poly>> jet_of_morphism(const std::vector<Poly>& components, int m);

// Evaluate the induced jet morphism at a jet point of the source.
JetPoint apply_jet_morphism(const std::vector<std::vector<Poly>>& jet_components,
                            const JetPoint& p);

} // namespace jetforge
