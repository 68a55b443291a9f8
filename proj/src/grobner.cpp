#include "jetforge/grobner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace jetforge {

MonomialOrder grevlex_order() {
    return [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); };
}

MonomialOrder elimination_order(const std::vector<JetVar>& eliminate) {
    std::set<JetVar> block(eliminate.begin(), eliminate.end());
    return [block](const Monomial& a, const Monomial& b) {
        int da = 0, db = 0;
        for (const auto& [v, e] : a.exponents())
            if (block.count(v)) da += e;
        for (const auto& [v, e] : b.exponents())
            if (block.count(v)) db += e;
        if (da != db) return da < db;
        return grevlex_less(a, b);
    };
}

const std::pair<const Monomial, Rational>& leading_term_under(const Poly& f,
                                                              const MonomialOrder& less) {
    if (f.is_zero()) throw std::domain_error("leading term of the zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it)
        if (less(best->first, it->first)) best = it;
    return *best;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& less) {
    const FieldSpec& field = f.field();
    Poly rest = f;
    Poly remainder = Poly::zero(field);
    while (!rest.is_zero()) {
        const auto& [lm, lc] = leading_term_under(rest, less);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const auto& [glm, glc] = leading_term_under(g, less);
            Monomial q;
            if (!lm.try_divide(glm, q)) continue;
            Rational factor = field.mul(lc, field.inv(glc));
            rest -= Poly::term(field, factor, q) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder += Poly::term(field, lc, lm);
            rest -= Poly::term(field, lc, lm);
        }
    }
    return remainder;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    return normal_form(f, basis, grevlex_order());
}

Division divide_with_cofactors(const Poly& f, const std::vector<Poly>& basis,
                               const MonomialOrder& less) {
    const FieldSpec& field = f.field();
    Division out;
    out.quotients.assign(basis.size(), Poly::zero(field));
    out.remainder = Poly::zero(field);
    Poly rest = f;
    while (!rest.is_zero()) {
        const auto& [lm, lc] = leading_term_under(rest, less);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const auto& [glm, glc] = leading_term_under(basis[i], less);
            Monomial q;
            if (!lm.try_divide(glm, q)) continue;
            Poly factor = Poly::term(field, field.mul(lc, field.inv(glc)), q);
            out.quotients[i] += factor;
            rest -= factor * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder += Poly::term(field, lc, lm);
            rest -= Poly::term(field, lc, lm);
        }
    }
    return out;
}

namespace {

Poly s_polynomial(const Poly& a, const Poly& b, const MonomialOrder& less) {
    const FieldSpec& field = a.field();
    const auto& [lma, lca] = leading_term_under(a, less);
    const auto& [lmb, lcb] = leading_term_under(b, less);
    Monomial l = lma.lcm(lmb);
    Monomial qa, qb;
    l.try_divide(lma, qa);
    l.try_divide(lmb, qb);
    return Poly::term(field, field.inv(lca), qa) * a -
           Poly::term(field, field.inv(lcb), qb) * b;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

} // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& less) {
    std::vector<Poly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!basis.empty() && g.field() != basis.front().field())
            throw FieldMismatch("generators over different fields");
        basis.push_back(g);
    }
    GroebnerBasis out{less, {}};
    if (basis.empty()) return out;
    // By value: push_back below may reallocate the basis.
    const FieldSpec field = basis.front().field();

    auto lm = [&](const Poly& p) -> const Monomial& { return leading_term_under(p, less).first; };

    std::vector<Pair> pairs;
    auto push_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = lm(basis[i]).lcm(lm(basis[k]));
            pairs.push_back({i, k, l, l.degree()});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_with(k);

    while (!pairs.empty()) {
        // Normal strategy: smallest lcm under the working order.
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [&](const Pair& a, const Pair& b) {
                                       if (a.lcm == b.lcm) return false;
                                       return less(a.lcm, b.lcm);
                                   });
        Pair p = *it;
        pairs.erase(it);

        const Monomial& li = lm(basis[p.i]);
        const Monomial& lj = lm(basis[p.j]);
        // First criterion: coprime leading monomials.
        if (li.coprime_with(lj)) continue;
        // Chain criterion: some other basis element divides the lcm and both
        // companion pairs are gone already.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!p.lcm.divisible_by(lm(basis[k]))) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k)) ||
                    (q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) skip = true;
        }
        if (skip) continue;

        Poly r = normal_form(s_polynomial(basis[p.i], basis[p.j], less), basis, less);
        if (r.is_zero()) continue;
        basis.push_back(r);
        push_pairs_with(basis.size() - 1);
    }

    // Interreduce and normalize to monic.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (k != i) others.push_back(basis[k]);
        Poly r = normal_form(basis[i], others, less);
        if (!r.is_zero()) {
            basis[i] = r;
            reduced.push_back(r.scaled(field.inv(leading_term_under(r, less).second)));
        } else {
            basis[i] = Poly::zero(field);
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return less(leading_term_under(a, less).first, leading_term_under(b, less).first);
    });
    out.elements = std::move(reduced);
    return out;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens) {
    return buchberger(gens, grevlex_order());
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens) {
    if (f.is_zero()) return true;
    GroebnerBasis gb = buchberger(gens);
    return normal_form(f, gb.elements, gb.order).is_zero();
}

namespace {

// Depth-first search for a maximum variable subset whose span misses every
// leading-monomial support.
void max_independent(const std::vector<std::set<JetVar>>& supports,
                     const std::vector<JetVar>& variables, std::size_t next,
                     std::set<JetVar>& current, std::size_t& best) {
    best = std::max(best, current.size());
    if (current.size() + (variables.size() - next) <= best) return;
    for (std::size_t i = next; i < variables.size(); ++i) {
        current.insert(variables[i]);
        bool ok = true;
        for (const auto& s : supports) {
            bool inside = true;
            for (const auto& v : s)
                if (!current.count(v)) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) max_independent(supports, variables, i + 1, current, best);
        current.erase(variables[i]);
    }
}

} // namespace

int krull_dimension(const std::vector<Poly>& gens, const std::vector<JetVar>& variables) {
    std::vector<Poly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return static_cast<int>(variables.size());
    GroebnerBasis gb = buchberger(nonzero);
    std::vector<std::set<JetVar>> supports;
    for (const auto& g : gb.elements) {
        const Monomial& l = leading_term_under(g, gb.order).first;
        if (l.is_one()) throw std::invalid_argument("krull_dimension of the unit ideal");
        std::set<JetVar> s;
        for (const auto& [v, e] : l.exponents()) s.insert(v);
        supports.push_back(std::move(s));
    }
    std::set<JetVar> current;
    std::size_t best = 0;
    max_independent(supports, variables, 0, current, best);
    return static_cast<int>(best);
}

namespace {

void enumerate_monomials(const std::vector<JetVar>& variables, int max_degree,
                         std::size_t next, Monomial& current,
                         std::vector<Monomial>& out) {
    out.push_back(current);
    if (max_degree == 0) return;
    for (std::size_t i = next; i < variables.size(); ++i) {
        Monomial extended = current * Monomial::var(variables[i]);
        std::swap(current, extended);
        enumerate_monomials(variables, max_degree - 1, i, current, out);
        std::swap(current, extended);
    }
}

} // namespace

bool local_membership_mod_degree(const Poly& f, const LocalIdealSpec& j, int degree_bound) {
    if (f.is_zero()) throw std::invalid_argument("local membership of the zero polynomial");
    if (degree_bound <= *f.ord())
        throw std::invalid_argument("degree bound must exceed ord of the element");
    const FieldSpec& field = f.field();

    // Row echelon of the truncated span, keyed by grevlex-leading monomial.
    std::map<Monomial, Poly, GrevlexLess> echelon;
    auto reduce = [&](Poly v) {
        while (!v.is_zero()) {
            const auto& [lmv, lcv] = v.leading_term();
            auto it = echelon.find(lmv);
            if (it == echelon.end()) break;
            v -= it->second.scaled(lcv);
        }
        return v;
    };
    auto insert = [&](const Poly& candidate) {
        Poly v = reduce(candidate);
        if (v.is_zero()) return;
        echelon.emplace(v.leading_term().first, v.monic());
    };

    for (const auto& g : j.generators) {
        if (g.is_zero()) continue;
        int room = degree_bound - 1 - *g.ord();
        if (room < 0) continue;
        Monomial scratch;
        std::vector<Monomial> multipliers;
        enumerate_monomials(j.ring_variables, room, 0, scratch, multipliers);
        for (const auto& mu : multipliers)
            insert((Poly::term(field, Rational(1), mu) * g).truncated_at_degree(degree_bound));
    }
    return reduce(f.truncated_at_degree(degree_bound)).is_zero();
}

} // namespace jetforge
