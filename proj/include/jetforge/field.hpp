#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetforge {

// Exact scalar. Over Q this is a full rational; over F_p only integer
// representatives in [0, p) are ever stored.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficient field: exact rationals or a prime field F_p, p < 2^31.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    static FieldSpec prime_field(std::int64_t p);

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    std::int64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }

    bool operator==(const FieldSpec&) const = default;

    // Canonical representative of a rational in this field. For F_p the
    // denominator is inverted mod p; throws if it vanishes mod p.
    Rational normalize(const Rational& value) const;

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }
    Rational inv(const Rational& a) const;
    Rational from_int(std::int64_t n) const { return normalize(Rational(n)); }

    std::string to_string() const;

private:
    FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

bool is_prime(std::int64_t n);

// Inverse of a mod p, 0 < a < p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

std::string coeff_to_string(const Rational& value);
Rational coeff_from_string(const std::string& text, const FieldSpec& field);

} // namespace jetforge
