#include "jetforge/jets.hpp"

#include <stdexcept>

namespace jetforge {

void AmbientIdeal::validate() const {
    for (const auto& g : generators) {
        if (g.field() != field) throw FieldMismatch("generator field differs from ideal field");
        if (g.is_zero())
            throw std::invalid_argument("zero generator; use an empty list for the zero ideal");
        for (const auto& [mono, c] : g.terms())
            for (const auto& [v, e] : mono.exponents()) {
                if (v.level != 0)
                    throw std::invalid_argument("ambient generators must use level-0 variables");
                if (v.index < 1 || v.index > ambient_dim)
                    throw std::invalid_argument("generator variable index exceeds ambient dimension");
            }
    }
}

const Poly& JetIdeal::at(int source_generator, int level) const {
    for (const auto& g : generators)
        if (g.source_generator == source_generator && g.level == level) return g.poly;
    throw std::out_of_range("no such jet generator");
}

std::vector<Poly> JetIdeal::nonzero_polys() const {
    std::vector<Poly> out;
    for (const auto& g : generators)
        if (!g.is_zero()) out.push_back(g.poly);
    return out;
}

bool JetIdeal::is_zero_ideal() const {
    for (const auto& g : generators)
        if (!g.is_zero()) return false;
    return true;
}

Rational JetPoint::coordinate(JetVar v) const {
    auto it = coordinates.find(v);
    return it == coordinates.end() ? Rational(0) : it->second;
}

JetIdeal jetify(const AmbientIdeal& ideal, int m) {
    if (m < 0) throw std::invalid_argument("jet order must be >= 0");
    ideal.validate();
    JetIdeal out;
    out.base = ideal;
    out.m = m;
    for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
        std::vector<Poly> levels = expand_in_t(ideal.generators[g], m);
        for (int i = 0; i <= m; ++i)
            out.generators.push_back({static_cast<int>(g), i, levels[i]});
    }
    return out;
}

std::vector<std::vector<Rational>> jet_residuals(const AmbientIdeal& ideal, const JetPoint& p) {
    ideal.validate();
    const FieldSpec& field = ideal.field;
    const int m = p.m;
    std::vector<std::vector<Rational>> out;
    for (const auto& g : ideal.generators) {
        // Evaluate g at the scalar t-series (sum_i p(x_{i,j}) t^i)_j by
        // direct truncated multiplication of coefficient vectors.
        std::vector<Rational> acc(m + 1, Rational(0));
        for (const auto& [mono, c] : g.terms()) {
            std::vector<Rational> prod(m + 1, Rational(0));
            prod[0] = c;
            for (const auto& [v, e] : mono.exponents()) {
                std::vector<Rational> s(m + 1);
                for (int i = 0; i <= m; ++i) s[i] = p.coordinate(JetVar{i, v.index});
                for (int k = 0; k < e; ++k) {
                    std::vector<Rational> next(m + 1, Rational(0));
                    for (int a = 0; a <= m; ++a)
                        for (int b = 0; a + b <= m; ++b)
                            next[a + b] = field.add(next[a + b], field.mul(prod[a], s[b]));
                    prod = std::move(next);
                }
            }
            for (int i = 0; i <= m; ++i) acc[i] = field.add(acc[i], prod[i]);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool lies_on_jet_scheme(const AmbientIdeal& ideal, const JetPoint& p) {
    for (const auto& residual : jet_residuals(ideal, p))
        for (const auto& r : residual)
            if (r != 0) return false;
    return true;
}

JetPoint truncate_point(const AmbientIdeal& ideal, const JetPoint& p, int m) {
    if (m > p.m) throw std::invalid_argument("truncation level exceeds the point's jet order");
    if (!lies_on_jet_scheme(ideal, p))
        throw std::invalid_argument("point does not lie on the jet scheme");
    JetPoint out;
    out.ambient_dim = p.ambient_dim;
    out.m = m;
    for (const auto& [v, c] : p.coordinates)
        if (v.level <= m && c != 0) out.coordinates.emplace(v, c);
    return out;
}

JetPoint trivial_jet(const AmbientIdeal& ideal, const std::vector<Rational>& x, int m) {
    ideal.validate();
    if (static_cast<int>(x.size()) != ideal.ambient_dim)
        throw std::invalid_argument("point dimension differs from ambient dimension");
    for (const auto& g : ideal.generators) {
        Rational v = g.evaluate([&](JetVar var) { return x[var.index - 1]; });
        if (v != 0) throw std::invalid_argument("point does not lie on X");
    }
    JetPoint out;
    out.ambient_dim = ideal.ambient_dim;
    out.m = m;
    for (int j = 1; j <= ideal.ambient_dim; ++j) {
        Rational c = ideal.field.normalize(x[j - 1]);
        if (c != 0) out.coordinates.emplace(JetVar{0, j}, c);
    }
    return out;
}

bool FiberIdeal::all_zero() const {
    for (const auto& g : generators)
        if (!g.is_zero()) return false;
    return true;
}

FiberIdeal fiber_over_trivial_jet(const AmbientIdeal& ideal, int m, int m_prime) {
    if (m < 0 || m >= m_prime) throw std::invalid_argument("need 0 <= m < m'");
    JetIdeal jets = jetify(ideal, m_prime);
    FiberIdeal out;
    out.m = m;
    out.m_prime = m_prime;
    for (const auto& g : jets.generators) {
        if (g.level <= m) continue;
        // Kill every term containing a variable of level <= m.
        Poly reduced = Poly::zero(ideal.field);
        for (const auto& [mono, c] : g.poly.terms()) {
            bool low = false;
            for (const auto& [v, e] : mono.exponents())
                if (v.level <= m) {
                    low = true;
                    break;
                }
            if (!low) reduced += Poly::term(ideal.field, c, mono);
        }
        out.generators.push_back({g.source_generator, g.level, reduced});
    }
    return out;
}

std::vector<std::vector<Poly>> jet_of_morphism(const std::vector<Poly>& components, int m) {
    std::vector<std::vector<Poly>> out;
    out.reserve(components.size());
    for (const auto& f : components) out.push_back(expand_in_t(f, m));
    return out;
}

JetPoint apply_jet_morphism(const std::vector<std::vector<Poly>>& jet_components,
                            const JetPoint& p) {
    JetPoint out;
    out.ambient_dim = static_cast<int>(jet_components.size());
    out.m = p.m;
    for (std::size_t q = 0; q < jet_components.size(); ++q) {
        const auto& levels = jet_components[q];
        for (std::size_t i = 0; i < levels.size(); ++i) {
            Rational v = levels[i].evaluate([&](JetVar var) { return p.coordinate(var); });
            if (v != 0) out.coordinates.emplace(JetVar{static_cast<int>(i), static_cast<int>(q) + 1}, v);
        }
    }
    return out;
}

} // namespace jetforge
