#include "jetforge/field.hpp"

#include <sstream>

namespace jetforge {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return ((old_s % p) + p) % p;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw std::invalid_argument("prime field modulus out of range [2, 2^31)");
    if (!is_prime(p))
        throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::PrimeField, p);
}

Rational FieldSpec::normalize(const Rational& value) const {
    if (kind_ == Kind::Rationals) return value;
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt pm(p_);
    BigInt n = num % pm;
    if (n < 0) n += pm;
    BigInt d = den % pm;
    if (d < 0) d += pm;
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    if (n == 0) return Rational(0);
    std::int64_t dinv = mod_inverse(d.convert_to<std::int64_t>(), p_);
    return Rational((n * dinv) % pm);
}

Rational FieldSpec::inv(const Rational& a) const {
    if (a == 0) throw std::domain_error("division by zero in field");
    if (kind_ == Kind::Rationals) return Rational(1) / a;
    Rational r = normalize(a);
    std::int64_t v = boost::multiprecision::numerator(r).convert_to<std::int64_t>();
    return Rational(mod_inverse(v, p_));
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::Rationals ? "Q" : "Fp " + std::to_string(p_);
}

std::string coeff_to_string(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

Rational coeff_from_string(const std::string& text, const FieldSpec& field) {
    try {
        return field.normalize(Rational(text));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient literal: " + text);
    }
}

} // namespace jetforge
