#include "jetforge/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jetforge {

namespace {

// Rank over the field by exact Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows, const FieldSpec& field) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        Rational inv = field.inv(rows[row][col]);
        for (std::size_t c = col; c < cols; ++c)
            rows[row][c] = field.mul(rows[row][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[row][c]));
        }
        ++rank;
        ++row;
    }
    return rank;
}

bool vanishes_at_origin(const Poly& g) { return g.coefficient_of(Monomial::one()) == 0; }

// Linear part of g as a row over level-0 variables 1..N.
std::vector<Rational> linear_row(const Poly& g, int ambient_dim) {
    std::vector<Rational> row(ambient_dim, Rational(0));
    for (int j = 1; j <= ambient_dim; ++j)
        row[j - 1] = g.coefficient_of(Monomial::var(JetVar{0, j}));
    return row;
}

int linear_parts_rank(const std::vector<Poly>& gens, int ambient_dim, const FieldSpec& field) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) rows.push_back(linear_row(g, ambient_dim));
    return matrix_rank(std::move(rows), field);
}

bool has_level_le(const Monomial& m, int level) {
    for (const auto& [v, e] : m.exponents())
        if (v.level <= level) return true;
    return false;
}

} // namespace

std::vector<JetVar> jet_ring_variables(int ambient_dim, int m) {
    std::vector<JetVar> vars;
    for (int i = 0; i <= m; ++i)
        for (int j = 1; j <= ambient_dim; ++j) vars.push_back(JetVar{i, j});
    return vars;
}

EmbeddingReduction embedding_dimension_at_origin(const AmbientIdeal& ideal) {
    ideal.validate();
    for (const auto& g : ideal.generators)
        if (!vanishes_at_origin(g))
            throw std::invalid_argument("origin does not lie on X");

    const FieldSpec& field = ideal.field;
    EmbeddingReduction out;
    out.linear_rank = linear_parts_rank(ideal.generators, ideal.ambient_dim, field);
    out.embdim = ideal.ambient_dim - out.linear_rank;

    std::vector<Poly> gens = ideal.generators;
    std::vector<int> vars; // surviving original indices
    for (int j = 1; j <= ideal.ambient_dim; ++j) vars.push_back(j);

    for (;;) {
        // Drop zero generators as they appear.
        std::erase_if(gens, [](const Poly& g) { return g.is_zero(); });

        // Prefer a (generator, variable) pair where the variable occurs only
        // in its linear term: the substitution is then exact.
        bool eliminated = false;
        for (std::size_t gi = 0; gi < gens.size() && !eliminated; ++gi) {
            for (int v : vars) {
                JetVar var{0, v};
                Rational c = gens[gi].coefficient_of(Monomial::var(var));
                if (c == 0) continue;
                bool only_linear = true;
                for (const auto& [mono, coeff] : gens[gi].terms()) {
                    int e = mono.exponent_of(var);
                    if (e > 0 && mono != Monomial::var(var)) {
                        only_linear = false;
                        break;
                    }
                }
                if (!only_linear) continue;
                Poly rest = gens[gi] - Poly::term(field, c, Monomial::var(var));
                Poly replacement = rest.scaled(field.neg(field.inv(c)));
                std::vector<Poly> next;
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    if (k == gi) continue;
                    next.push_back(gens[k].substitute({{var, replacement}}));
                }
                gens = std::move(next);
                std::erase(vars, v);
                eliminated = true;
                break;
            }
        }
        if (eliminated) continue;

        // A variable with a linear occurrence that also shows up at higher
        // degree: eliminate it through a Groebner elimination order. Near the
        // origin the graph projection is an isomorphism, so the elimination
        // ideal is the reduced presentation.
        int fallback_var = 0;
        for (const auto& g : gens) {
            for (int v : vars)
                if (g.coefficient_of(Monomial::var(JetVar{0, v})) != 0) {
                    fallback_var = v;
                    break;
                }
            if (fallback_var) break;
        }
        if (!fallback_var) break;
        JetVar var{0, fallback_var};
        GroebnerBasis gb = buchberger(gens, elimination_order({var}));
        std::vector<Poly> next;
        for (const auto& g : gb.elements) {
            bool uses = false;
            for (const auto& [mono, c] : g.terms())
                if (mono.exponent_of(var) > 0) {
                    uses = true;
                    break;
                }
            if (!uses) next.push_back(g);
        }
        gens = std::move(next);
        std::erase(vars, fallback_var);
    }

    // Renumber surviving variables to 1..embdim.
    std::map<JetVar, Poly> renumber;
    for (std::size_t k = 0; k < vars.size(); ++k)
        renumber.emplace(JetVar{0, vars[k]},
                         Poly::variable(field, JetVar{0, static_cast<int>(k) + 1}));
    out.reduced.field = field;
    out.reduced.ambient_dim = static_cast<int>(vars.size());
    for (const auto& g : gens) {
        Poly r = g.substitute(renumber);
        if (!r.is_zero()) out.reduced.generators.push_back(r);
    }
    out.surviving_indices = vars;
    return out;
}

SmoothnessReport jet_smoothness_report(const AmbientIdeal& ideal, int m) {
    ideal.validate();
    for (const auto& g : ideal.generators)
        if (!vanishes_at_origin(g))
            throw std::invalid_argument("origin does not lie on X");

    SmoothnessReport report;
    report.point.ambient_dim = ideal.ambient_dim;
    report.point.m = m;

    if (ideal.is_zero_ideal()) {
        report.verdict = Verdict::Smooth;
        report.codim_expected = 0;
        report.notes = "zero ideal: X_m is affine space of dimension " +
                       std::to_string(ideal.ambient_dim * (m + 1));
        return report;
    }

    JetIdeal jets = jetify(ideal, m);
    std::vector<JetVar> vars = jet_ring_variables(ideal.ambient_dim, m);
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : jets.generators) {
        if (g.is_zero()) continue;
        std::vector<Rational> row;
        row.reserve(vars.size());
        for (const auto& v : vars) row.push_back(g.poly.coefficient_of(Monomial::var(v)));
        rows.push_back(std::move(row));
    }
    report.jacobian_rank = matrix_rank(std::move(rows), ideal.field);
    report.codim_expected = 1; // nonzero ideal: codimension at least one

    if (report.jacobian_rank == 0) {
        report.verdict = Verdict::Singular;
        report.notes = "Jacobian of the jet ideal vanishes at the trivial jet 0_m "
                       "while the ideal is nonzero";
    } else {
        report.verdict = Verdict::Inconclusive;
        report.notes = "positive Jacobian rank at 0_m but the local codimension is "
                       "unknown; reduce to the minimal embedding first";
    }
    return report;
}

IdealOrder ord_ideal(const AmbientIdeal& ideal) {
    ideal.validate();
    if (ideal.is_zero_ideal()) throw std::invalid_argument("ord of the zero ideal");
    IdealOrder out;
    out.d = -1;
    for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
        int o = *ideal.generators[g].ord();
        if (out.d < 0 || o < out.d) {
            out.d = o;
            out.generator_index = static_cast<int>(g);
        }
    }
    return out;
}

namespace {

struct ElementChecks {
    bool ord_matches = false;
    bool monomials_in_m = false;
    bool initial_form_high_level = false;
};

ElementChecks check_witness_element(const Poly& f, int m, int d) {
    ElementChecks out;
    if (f.is_zero()) return out;
    out.ord_matches = (*f.ord() == d);
    out.monomials_in_m = true;
    for (const auto& [mono, c] : f.terms())
        if (!has_level_le(mono, m)) {
            out.monomials_in_m = false;
            break;
        }
    Poly init = f.initial_form();
    for (const auto& [mono, c] : init.terms())
        for (const auto& [v, e] : mono.exponents())
            if (v.level > m) {
                out.initial_form_high_level = true;
                break;
            }
    return out;
}

} // namespace

FlatnessWitness flat_witness_char0(const AmbientIdeal& ideal, int m, int m_prime) {
    if (ideal.field.characteristic() != 0)
        throw std::invalid_argument("flat_witness_char0 requires characteristic 0");
    if (m < 0 || m >= m_prime) throw std::invalid_argument("need 0 <= m < m'");
    if (ideal.is_zero_ideal())
        throw std::invalid_argument("no witness: X is affine space, truncations are flat");
    IdealOrder io = ord_ideal(ideal);
    if (io.d < 2)
        throw std::invalid_argument(
            "no witness: a generator of order 1 means the origin is smooth after "
            "reduction to the minimal embedding");

    const Poly& f = ideal.generators[io.generator_index];
    std::vector<Poly> levels = expand_in_t(f, m + 1);

    FlatnessWitness w;
    w.m = m;
    w.m_prime = m_prime;
    w.kind = WitnessKind::WitnessElement;
    w.element = levels[m + 1];
    w.d = io.d;
    w.source_generator = io.generator_index;
    w.level_used = m + 1;

    ElementChecks checks = check_witness_element(w.element, m, io.d);
    if (!checks.ord_matches || !checks.monomials_in_m || !checks.initial_form_high_level)
        throw std::logic_error("char-0 witness invariant failed; input may not be in "
                               "its minimal embedding");
    return w;
}

WitnessResult flat_witness_charp(const AmbientIdeal& ideal, int m, int m_prime,
                                 bool reduced_asserted) {
    std::int64_t p = ideal.field.characteristic();
    if (p == 0) throw std::invalid_argument("flat_witness_charp requires characteristic p");
    if (m < 0 || m >= m_prime) throw std::invalid_argument("need 0 <= m < m'");
    if (ideal.is_zero_ideal())
        return {std::nullopt, "NO WITNESS FOUND: X is affine space, truncations are flat"};
    IdealOrder io = ord_ideal(ideal);
    if (io.d < 2)
        return {std::nullopt,
                "NO WITNESS FOUND: a generator of order 1 means a smooth origin"};

    const int n = ideal.ambient_dim;

    if (m == 0) {
        if (m_prime != 1)
            throw std::invalid_argument(
                "m = 0 in positive characteristic is open (except m' = 1): the paper "
                "does not settle whether flatness of psi_{m',0} forces smoothness");
        if (!reduced_asserted)
            return {std::nullopt,
                    "NO WITNESS FOUND: the m' = 1 tangent-space argument needs the "
                    "reducedness assertion"};
        TangentReport t = tangent_space_report(ideal);
        if (!t.singular_flagged)
            return {std::nullopt, "NO WITNESS FOUND: tangent fiber dimension equals dim(X,0)"};
        FlatnessWitness w;
        w.m = 0;
        w.m_prime = 1;
        w.kind = WitnessKind::FiberJump;
        w.d = io.d;
        w.fiber_dim = t.fiber_dim;
        w.base_dim = t.krull_dim;
        return {w, "pi_1 fiber over the origin jumps above dim(X,0)"};
    }

    if (reduced_asserted && m_prime < io.d * (m + 1)) {
        FiberIdeal fiber = fiber_over_trivial_jet(ideal, m, m_prime);
        if (!fiber.all_zero())
            return {std::nullopt,
                    "NO WITNESS FOUND: fiber ideal over the trivial jet is nonzero"};
        int dim_x = krull_dimension(ideal.generators, jet_ring_variables(n, 0));
        int fiber_dim = n * (m_prime - m);
        if (fiber_dim <= (m_prime - m) * dim_x)
            return {std::nullopt, "NO WITNESS FOUND: no fiber-dimension jump"};
        FlatnessWitness w;
        w.m = m;
        w.m_prime = m_prime;
        w.kind = WitnessKind::FiberJump;
        w.d = io.d;
        w.fiber_dim = fiber_dim;
        w.base_dim = dim_x;
        return {w, "fiber over the trivial jet is free of dimension " +
                       std::to_string(fiber_dim)};
    }

    // Witness element route: pick a minimal-degree monomial of f and move one
    // variable's full exponent block up to level s.
    const Poly& f = ideal.generators[io.generator_index];
    Poly init = f.initial_form();
    Monomial source = leading_term_under(init, grevlex_order()).first;
    int j0 = source.exponents().begin()->first.index;
    int e = source.exponents().begin()->second;
    // Minimal s with s*e strictly above m; s*e = m would reproduce a
    // generator of I itself.
    int s = m / e + 1;
    if (s * e > m_prime)
        return {std::nullopt,
                "NO WITNESS FOUND: no level s*e inside (m, m']; input may be "
                "non-reduced or the truncation may be flat"};

    std::vector<Poly> levels = expand_in_t(f, s * e);
    FlatnessWitness w;
    w.m = m;
    w.m_prime = m_prime;
    w.kind = WitnessKind::WitnessElement;
    w.element = levels[s * e];
    w.d = io.d;
    w.source_generator = io.generator_index;
    w.level_used = s * e;
    Monomial cert = Monomial::var(JetVar{s, j0}, e);
    for (const auto& [v, exp] : source.exponents())
        if (v.index != j0) cert = cert * Monomial::var(v, exp);
    w.certificate_monomial = cert;

    if (w.element.is_zero())
        return {std::nullopt,
                "NO WITNESS FOUND: F_{s*e} vanishes; input may be non-reduced or flat"};
    ElementChecks checks = check_witness_element(w.element, m, io.d);
    bool coeff_ok = w.element.coefficient_of(cert) == f.coefficient_of(source);
    bool weight_ok = cert.weight() > m;
    if (!checks.ord_matches || !checks.monomials_in_m || !checks.initial_form_high_level ||
        !coeff_ok || !weight_ok)
        return {std::nullopt,
                "NO WITNESS FOUND: certificate checks failed; input may be non-reduced "
                "or the truncation may be flat"};
    return {w, "witness element F_{" + std::to_string(s * e) + "} certifies non-flatness"};
}

LocalIdealSpec make_local_ideal(const AmbientIdeal& ideal, int m, int m_prime) {
    JetIdeal jets = jetify(ideal, m_prime);
    LocalIdealSpec j;
    j.maximal_ideal_level_bound = m;
    j.ring_variables = jet_ring_variables(ideal.ambient_dim, m_prime);
    // I*R_{m'}: the level <= m jet generators.
    for (const auto& g : jets.generators)
        if (g.level <= m && !g.is_zero()) j.generators.push_back(g.poly);
    // M*I': every maximal-ideal variable times every jet generator.
    for (int level = 0; level <= m; ++level)
        for (int index = 1; index <= ideal.ambient_dim; ++index) {
            Poly v = Poly::variable(ideal.field, JetVar{level, index});
            for (const auto& g : jets.generators)
                if (!g.is_zero()) j.generators.push_back(v * g.poly);
        }
    return j;
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VerificationReport verify_witness(const FlatnessWitness& w, const AmbientIdeal& ideal,
                                  int degree_bound) {
    VerificationReport report;
    auto add = [&](std::string name, bool passed, std::string detail = "") {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    if (w.kind == WitnessKind::FiberJump) {
        FiberIdeal fiber = fiber_over_trivial_jet(ideal, w.m, w.m_prime);
        add("fiber-ideal-zero", fiber.all_zero(),
            "generators of psi^{-1}(0_m) all vanish");
        int expected = ideal.ambient_dim * (w.m_prime - w.m);
        add("fiber-dimension", w.fiber_dim == expected,
            "fiber is A^" + std::to_string(expected));
        int dim_x = krull_dimension(ideal.generators, jet_ring_variables(ideal.ambient_dim, 0));
        add("dimension-jump", w.fiber_dim > (w.m_prime - w.m) * dim_x,
            std::to_string(w.fiber_dim) + " > " +
                std::to_string((w.m_prime - w.m) * dim_x));
        return report;
    }

    IdealOrder io = ord_ideal(ideal);
    std::vector<Poly> levels = expand_in_t(ideal.generators[w.source_generator], w.level_used);
    add("element-in-jet-ideal", levels[w.level_used] == w.element,
        "F equals the recomputed jet generator F_{g," + std::to_string(w.level_used) + "}");

    ElementChecks checks = check_witness_element(w.element, w.m, io.d);
    add("ord-equals-ideal-order", checks.ord_matches && w.d == io.d,
        "ord F = d = " + std::to_string(io.d));
    add("monomials-in-M", checks.monomials_in_m,
        "every monomial has a factor of level <= " + std::to_string(w.m));
    add("initial-form-level-exceeds-m", checks.initial_form_high_level,
        "initial form involves a variable of level > " + std::to_string(w.m));
    if (!w.certificate_monomial.is_one()) {
        Rational transported = w.element.coefficient_of(w.certificate_monomial);
        Rational src = ideal.generators[w.source_generator].coefficient_of(
            leading_term_under(ideal.generators[w.source_generator].initial_form(),
                               grevlex_order())
                .first);
        add("certificate-coefficient", transported != 0 && transported == src,
            "coefficient transported unchanged (Lemma on monomial appearance)");
        add("certificate-weight", w.certificate_monomial.weight() > w.m,
            "certificate monomial has weight > m");
    }
    LocalIdealSpec j = make_local_ideal(ideal, w.m, w.m_prime);
    bool member = local_membership_mod_degree(w.element, j, degree_bound);
    add("local-nonmembership", !member,
        member ? "membership not excluded at degree bound " + std::to_string(degree_bound)
               : "F is outside M*I' + I*R_{m'} modulo degree " +
                     std::to_string(degree_bound));
    return report;
}

TangentReport tangent_space_report(const AmbientIdeal& ideal) {
    ideal.validate();
    TangentReport out;
    const int n = ideal.ambient_dim;
    if (ideal.is_zero_ideal()) {
        out.fiber_dim = n;
        out.embdim = n;
        out.krull_dim = n;
        return out;
    }
    // pi_1 fiber over the origin: linear forms F_{g,1}(0, x_1).
    FiberIdeal fiber = fiber_over_trivial_jet(ideal, 0, 1);
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : fiber.generators) {
        std::vector<Rational> row(n, Rational(0));
        for (int j = 1; j <= n; ++j)
            row[j - 1] = g.poly.coefficient_of(Monomial::var(JetVar{1, j}));
        rows.push_back(std::move(row));
    }
    out.fiber_dim = n - matrix_rank(std::move(rows), ideal.field);
    out.embdim = embedding_dimension_at_origin(ideal).embdim;
    out.krull_dim = krull_dimension(ideal.generators, jet_ring_variables(n, 0));
    out.singular_flagged = out.fiber_dim > out.krull_dim;
    return out;
}

} // namespace jetforge
