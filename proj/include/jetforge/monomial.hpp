#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace jetforge {

// A jet variable x_{i,j}: level i is the jet order, index j the ambient
// coordinate (1-based). Level-major order fixes all tie-breaking.
struct JetVar {
    int level = 0;
    int index = 1;

    auto operator<=>(const JetVar&) const = default;
};

std::string to_string(const JetVar& v);

// Sparse exponent map; zero exponents are never stored.
class Monomial {
public:
    using Map = std::map<JetVar, int>;

    Monomial() = default;
    explicit Monomial(Map exponents);
    static Monomial var(JetVar v, int exp = 1);
    static Monomial one() { return Monomial(); }

    const Map& exponents() const { return exp_; }
    bool is_one() const { return exp_.empty(); }
    int exponent_of(JetVar v) const;

    int degree() const;
    // Sum of level * exponent over all entries.
    long long weight() const;
    int max_level() const;

    Monomial operator*(const Monomial& other) const;
    // Divide, or return false if not divisible.
    bool try_divide(const Monomial& divisor, Monomial& quotient) const;
    bool divisible_by(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    // Deterministic canonical order for term-map storage (not a monomial order).
    bool operator<(const Monomial& other) const { return exp_ < other.exp_; }

    std::string to_string() const;

private:
    Map exp_;
};

// Graded reverse lexicographic order over the level-major JetVar order.
// Returns true if a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

} // namespace jetforge
