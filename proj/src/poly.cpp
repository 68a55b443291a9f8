#include "jetforge/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jetforge {

Poly::Poly(FieldSpec field, TermMap terms) : field_(field) {
    for (auto& [m, c] : terms) {
        Rational cc = field_.normalize(c);
        if (cc != 0) terms_.emplace(m, std::move(cc));
    }
}

Poly Poly::constant(FieldSpec field, const Rational& c) {
    Poly p(field);
    p.add_term(Monomial::one(), c);
    return p;
}

Poly Poly::variable(FieldSpec field, JetVar v) {
    Poly p(field);
    p.add_term(Monomial::var(v), Rational(1));
    return p;
}

Poly Poly::term(FieldSpec field, const Rational& c, const Monomial& m) {
    Poly p(field);
    p.add_term(m, c);
    return p;
}

Rational Poly::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    Rational cc = field_.normalize(c);
    if (cc == 0) return;
    auto [it, inserted] = terms_.emplace(m, cc);
    if (!inserted) {
        it->second = field_.add(it->second, cc);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (field_ != other.field_) throw FieldMismatch("polynomial field mismatch in +");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (field_ != other.field_) throw FieldMismatch("polynomial field mismatch in -");
    for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
    return *this;
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const {
    Poly r = *this;
    r -= other;
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    if (field_ != other.field_) throw FieldMismatch("polynomial field mismatch in *");
    Poly r(field_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, field_.mul(ca, cb));
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(field_);
    Rational cc = field_.normalize(c);
    if (cc == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(k, cc));
    return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

bool Poly::operator==(const Poly& other) const {
    return field_ == other.field_ && terms_ == other.terms_;
}

std::optional<int> Poly::ord() const {
    std::optional<int> best;
    for (const auto& [m, c] : terms_) {
        int d = m.degree();
        if (!best || d < *best) best = d;
    }
    return best;
}

Poly Poly::initial_form() const {
    if (is_zero()) throw std::domain_error("initial form of the zero polynomial");
    int d = *ord();
    Poly r(field_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Poly::max_level() const {
    int lvl = 0;
    for (const auto& [m, c] : terms_) lvl = std::max(lvl, m.max_level());
    return lvl;
}

long long Poly::max_weight() const {
    long long w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

bool Poly::is_homogeneous() const {
    if (is_zero()) return true;
    return *ord() == total_degree();
}

Poly Poly::partial_derivative(JetVar v) const {
    Poly r(field_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        Monomial q;
        m.try_divide(Monomial::var(v), q);
        r.add_term(q, field_.mul(c, field_.from_int(e)));
    }
    return r;
}

const std::pair<const Monomial, Rational>& Poly::leading_term() const {
    if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grevlex_less(best->first, it->first)) best = it;
    return *best;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_term().second));
}

Poly Poly::substitute(const std::map<JetVar, Poly>& assignment) const {
    Poly result(field_);
    for (const auto& [m, c] : terms_) {
        Poly prod = Poly::constant(field_, c);
        Monomial untouched;
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                untouched = untouched * Monomial::var(v, e);
                continue;
            }
            for (int k = 0; k < e; ++k) prod = prod * it->second;
        }
        result += prod * Poly::term(field_, Rational(1), untouched);
    }
    return result;
}

Rational Poly::evaluate(const std::function<Rational(JetVar)>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.exponents()) {
            Rational x = field_.normalize(point(var));
            for (int k = 0; k < e; ++k) v = field_.mul(v, x);
        }
        total = field_.add(total, v);
    }
    return field_.normalize(total);
}

Poly Poly::truncated_at_degree(int bound) const {
    Poly r(field_);
    for (const auto& [m, c] : terms_)
        if (m.degree() < bound) r.terms_.emplace(m, c);
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // Print grevlex-descending so the leading term comes first.
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return grevlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational ac = c;
        bool negative = c < 0;
        if (negative) ac = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one())
            os << coeff_to_string(ac);
        else if (ac == 1)
            os << m.to_string();
        else
            os << coeff_to_string(ac) << "*" << m.to_string();
    }
    return os.str();
}

} // namespace jetforge
