#pragma once

#include <functional>
#include <vector>

#include "jetforge/poly.hpp"

namespace jetforge {

// Strict "less" on monomials. All defaults are graded reverse lex over the
// level-major variable order.
using MonomialOrder = std::function<bool(const Monomial&, const Monomial&)>;

MonomialOrder grevlex_order();
// Elimination order for a variable block E: monomials with higher E-degree
// are larger, ties broken by grevlex. A Groebner basis under this order
// intersected with k[vars \ E] generates the elimination ideal.
MonomialOrder elimination_order(const std::vector<JetVar>& eliminate);

const std::pair<const Monomial, Rational>& leading_term_under(const Poly& f,
                                                              const MonomialOrder& less);

// Fully reduced normal form of f modulo the (not necessarily Groebner) list.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& less);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

// Multivariate division with quotient tracking: f = sum q_i b_i + remainder.
struct Division {
    std::vector<Poly> quotients;
    Poly remainder;

    Division() : remainder(FieldSpec::rationals()) {}
};

Division divide_with_cofactors(const Poly& f, const std::vector<Poly>& basis,
                               const MonomialOrder& less);

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly> elements; // interreduced, monic
};

// Buchberger with normal-strategy pair selection and both elimination
// criteria (coprime leading terms, chain criterion).
GroebnerBasis buchberger(const std::vector<Poly>& gens);
GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& less);

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens);

// Dimension of V(gens) inside the affine space with the given coordinates:
// maximal cardinality of a variable subset meeting no leading monomial's
// support. Throws std::invalid_argument on the unit ideal.
int krull_dimension(const std::vector<Poly>& gens, const std::vector<JetVar>& variables);

// J = M*I' + I*R_{m'} as an explicit generator list, together with the full
// coordinate list of the ambient jet ring R_{m'}.
struct LocalIdealSpec {
    std::vector<Poly> generators;
    int maximal_ideal_level_bound = 0; // m: M = (x_0, ..., x_m)
    std::vector<JetVar> ring_variables;
};

// Degree-truncated membership of F in J localized at the origin: true iff the
// degree-<D truncation of F lies in the k-span of {mu * g truncated at D}.
// A false result soundly certifies F not in J in the local ring; true is
// inconclusive ("not excluded at this bound").
// Throws std::invalid_argument when D <= ord(F) or F = 0.
bool local_membership_mod_degree(const Poly& f, const LocalIdealSpec& j, int degree_bound);

} // namespace jetforge
