#include "jetforge/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jetforge {

std::string to_string(const JetVar& v) {
    return "x[" + std::to_string(v.level) + "][" + std::to_string(v.index) + "]";
}

Monomial::Monomial(Map exponents) : exp_(std::move(exponents)) {
    for (const auto& [v, e] : exp_)
        if (e <= 0) throw std::invalid_argument("monomial exponents must be positive");
}

Monomial Monomial::var(JetVar v, int exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.exp_[v] = exp;
    return m;
}

int Monomial::exponent_of(JetVar v) const {
    auto it = exp_.find(v);
    return it == exp_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exp_) d += e;
    return d;
}

long long Monomial::weight() const {
    long long w = 0;
    for (const auto& [v, e] : exp_) w += static_cast<long long>(v.level) * e;
    return w;
}

int Monomial::max_level() const {
    int lvl = 0;
    for (const auto& [v, e] : exp_) lvl = std::max(lvl, v.level);
    return lvl;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [v, e] : other.exp_) r.exp_[v] += e;
    return r;
}

bool Monomial::try_divide(const Monomial& divisor, Monomial& quotient) const {
    Map q = exp_;
    for (const auto& [v, e] : divisor.exp_) {
        auto it = q.find(v);
        if (it == q.end() || it->second < e) return false;
        it->second -= e;
        if (it->second == 0) q.erase(it);
    }
    quotient = Monomial();
    quotient.exp_ = std::move(q);
    return true;
}

bool Monomial::divisible_by(const Monomial& divisor) const {
    Monomial q;
    return try_divide(divisor, q);
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [v, e] : other.exp_) {
        int& cur = r.exp_[v];
        cur = std::max(cur, e);
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (const auto& [v, e] : other.exp_)
        if (exp_.count(v)) return false;
    return true;
}

std::string Monomial::to_string() const {
    if (exp_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exp_) {
        if (!first) os << "*";
        first = false;
        os << jetforge::to_string(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Equal degree: compare at the largest variable where exponents differ;
    // the monomial with the larger exponent there is the smaller one.
    auto ia = a.exponents().rbegin(), ea = a.exponents().rend();
    auto ib = b.exponents().rbegin(), eb = b.exponents().rend();
    while (ia != ea && ib != eb) {
        if (ia->first > ib->first) return true;   // a has extra weight in a larger var
        if (ib->first > ia->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    // One exhausted; any remaining entries sit in smaller variables and the
    // degrees already matched, so remaining implies the other ran out of mass.
    return false;
}

} // namespace jetforge
