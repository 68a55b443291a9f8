#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetforge/field.hpp"
#include "jetforge/monomial.hpp"

namespace jetforge {

// Sparse exact multivariate polynomial over a fixed field in jet variables.
// Canonical: zero coefficients are never stored, so equal polynomials have
// identical term maps. Immutable in spirit; arithmetic returns fresh values.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Poly(FieldSpec field) : field_(field) {}
    Poly(FieldSpec field, TermMap terms);

    static Poly zero(FieldSpec field) { return Poly(field); }
    static Poly constant(FieldSpec field, const Rational& c);
    static Poly variable(FieldSpec field, JetVar v);
    static Poly term(FieldSpec field, const Rational& c, const Monomial& m);

    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient_of(const Monomial& m) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly scaled(const Rational& c) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    bool operator==(const Poly& other) const;

    // Lowest total degree among the terms; empty for the zero polynomial.
    std::optional<int> ord() const;
    // Sum of the terms of degree exactly ord(); throws on zero input.
    Poly initial_form() const;
    int total_degree() const;
    int max_level() const;
    long long max_weight() const;
    bool is_homogeneous() const;

    // Formal partial derivative; exponent factors reduced in the field.
    Poly partial_derivative(JetVar v) const;

    // Grevlex-leading term; throws on zero input.
    const std::pair<const Monomial, Rational>& leading_term() const;
    Poly monic() const;

    // Substitute each listed variable by a polynomial, leaving others alone.
    Poly substitute(const std::map<JetVar, Poly>& assignment) const;
    Rational evaluate(const std::function<Rational(JetVar)>& point) const;
    // Drop every term of total degree >= bound.
    Poly truncated_at_degree(int bound) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    FieldSpec field_;
    TermMap terms_;
};

Poly operator*(const Rational& c, const Poly& p);

} // namespace jetforge
