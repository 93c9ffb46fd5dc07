#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers.
 *
 * A thin value type over GMP's mpq_class. Every value is kept in canonical
 * form: positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
 * Serialization is always the decimal "p/q" form (or "p" when q = 1).
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace carleman::exact {

class Rational {
public:
    Rational() = default;
    Rational(long value);  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer);
    explicit Rational(mpq_class value);

    /// Parses "p", "p/q", or a plain decimal such as "-0.125" or "1e-3".
    /// Throws std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational pow(int exponent) const;

    /// Canonical "p/q" string.
    [[nodiscard]] std::string to_string() const;
    /// Fixed-point rendering with `digits` places after the point, rounded
    /// half away from zero.
    [[nodiscard]] std::string to_decimal(int digits) const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace carleman::exact
