#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are indexed by degree. The representation is trimmed after
 * every operation so the stored leading coefficient is nonzero; the zero
 * polynomial has no coefficients and degree -1.
 */

#include "carleman/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace carleman::exact {

class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coefficients);
    explicit RatPoly(std::vector<Rational> coefficients);

    static RatPoly constant(const Rational& value);
    /// coefficient * t^degree
    static RatPoly monomial(const Rational& coefficient, int degree);
    /// (t - r_1)(t - r_2)...(t - r_n)
    static RatPoly from_roots(std::span<const Rational> roots);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of t^k; zero for k outside [0, degree].
    [[nodiscard]] Rational coeff(int k) const;
    [[nodiscard]] const Rational& leading() const;
    /// Lowest-degree nonzero coefficient.
    [[nodiscard]] const Rational& trailing() const;
    /// Largest j with t^j dividing the polynomial (0 for the zero polynomial).
    [[nodiscard]] int trailing_degree() const;

    [[nodiscard]] Rational operator()(const Rational& t) const;

    [[nodiscard]] RatPoly derivative() const;
    /// q(u) = p(u + shift)
    [[nodiscard]] RatPoly taylor_shift(const Rational& shift) const;
    /// p divided by t^j where j = trailing_degree().
    [[nodiscard]] RatPoly strip_t_power() const;
    /// Positive rational multiple with coprime integer coefficients.
    [[nodiscard]] RatPoly primitive_part() const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& scalar);

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(RatPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend RatPoly operator*(const Rational& lhs, RatPoly rhs) { return rhs *= lhs; }
    friend RatPoly operator-(const RatPoly& p);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor);

    [[nodiscard]] RatPoly pow(int exponent) const;

    /// Coefficients as canonical "p/q" strings, lowest degree first.
    [[nodiscard]] std::vector<std::string> to_strings() const;
    /// Human-readable form, highest degree first, e.g. "79/23040*t^3 + 1/288".
    [[nodiscard]] std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Free-function spellings of the core algebra.
inline RatPoly poly_add(const RatPoly& p, const RatPoly& q) { return p + q; }
inline RatPoly poly_mul(const RatPoly& p, const RatPoly& q) { return p * q; }
inline RatPoly poly_shift(const RatPoly& p, const Rational& c) { return p.taylor_shift(c); }

/// Sturm chain p, p', -rem(p, p'), ... with each member scaled to its
/// primitive part (positive factor, so signs are unchanged).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

/// Number of distinct real roots of p in (0, +inf).
/// Throws std::domain_error("indeterminate root count") for the zero polynomial.
int sturm_positive_root_count(const RatPoly& p);

/// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_root_count(const RatPoly& p, const Rational& a, const Rational& b);

}  // namespace carleman::exact
