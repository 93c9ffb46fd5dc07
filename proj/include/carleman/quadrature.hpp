#pragma once

/**
 * @file quadrature.hpp
 * @brief The kernel g(s) and high-precision quadrature of its moments.
 *
 *   g(s) = (1/pi) s^s (1-s)^{1-s} sin(pi s),  0 < s < 1;   g(0) = g(1) = 0.
 *
 * Integrals are computed with double-exponential (tanh-sinh) quadrature over
 * mpfr reals. The d/ds of s ln s blows up at both endpoints, which the
 * tanh-sinh node clustering absorbs; integrands receive each node together
 * with its exact distances to both interval ends so that 1 - s never
 * suffers cancellation near s = 1.
 */

#include "carleman/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <mutex>
#include <string>

namespace carleman::quad {

// Expression templates off: nested mpfr expressions are evaluated eagerly.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using exact::Rational;

struct Precision {
    double target_abs_tol = 1e-12;
    int working_digits = 40;

    /// Throws std::invalid_argument unless working_digits >= 25 and
    /// working_digits >= 3 + ceil(-log10(target_abs_tol)).
    void validate() const;
};

/// Sets the working precision of newly created Reals for its lifetime.
/// mpfr_float's default precision is process-wide, so scopes serialize.
class PrecisionScope {
public:
    explicit PrecisionScope(const Precision& precision);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    std::unique_lock<std::recursive_mutex> lock_;
    unsigned previous_digits_;
};

struct QuadResult {
    Real value;
    Real abs_error_estimate;
    int subintervals_used = 0;
    int levels = 0;
    long evaluations = 0;
    bool converged = false;
};

/// A quadrature node: the abscissa and its distances to the two ends of the
/// top-level interval handed to `integrate`.
struct Node {
    Real x;
    Real from_a;
    Real from_b;
};

using Integrand = std::function<Real(const Node&)>;

struct QuadOptions {
    int max_level = 10;        // h = 2^-level
    int min_level = 3;         // no convergence claim before this level
    int max_subintervals = 32;
};

/// Tanh-sinh on [a, b], bisecting when a piece fails to converge within
/// max_level. Must be called inside a PrecisionScope. Throws
/// std::range_error if the integrand produces a non-finite value.
[[nodiscard]] QuadResult integrate(const Integrand& f, const Real& a, const Real& b, const Real& abs_tol,
                                   const QuadOptions& options = {});

[[nodiscard]] Real to_real(const Rational& q);
[[nodiscard]] Real pi_real();
[[nodiscard]] Real e_real();

/// g(s) for s in [0, 1]; throws std::domain_error outside.
[[nodiscard]] Real g_eval(const Real& s);
/// g evaluated from s and its complement sc = 1 - s (both in [0, 1]).
[[nodiscard]] Real g_kernel(const Real& s, const Real& sc);
/// g(s)/s with its continuous extension 1 at s = 0.
[[nodiscard]] Real g_over_s(const Real& s, const Real& sc);

// The operations below open their own PrecisionScope.

/// integral_0^1 g(s) s^{k-2} ds, k >= 2 (equals e b_k).
[[nodiscard]] QuadResult moment(int k, const Precision& prec = {});
/// integral_0^1 g(s) (1-s)^{k-2} ds, k >= 2.
[[nodiscard]] QuadResult mirrored_moment(int k, const Precision& prec = {});
/// integral_0^1 g(s)/s ds (equals e/2 - 1).
[[nodiscard]] QuadResult reciprocal_moment(const Precision& prec = {});
/// integral_0^1 g(s)/(1-s) ds.
[[nodiscard]] QuadResult mirrored_reciprocal_moment(const Precision& prec = {});

/// d_n = ((-1)^{n-1} + integral_0^1 (12t-1)^{n-1} g(t)/t dt) / (12^{n-1} e),
/// integral split at t = 1/12. Throws std::domain_error outside 2 <= n <= 12.
[[nodiscard]] QuadResult d_numeric(int n, const Precision& prec = {});

struct IdentityCheck {
    Real lhs;
    Real rhs;
    Real abs_diff;
    QuadResult quad;
};

/// lhs = (1+x)(e - (1+1/x)^x), rhs = e/2 + integral_0^1 g(s)/(x+s) ds.
[[nodiscard]] IdentityCheck h_identity_check(const Rational& x, const Precision& prec = {});

/// e sigma_m(x) (exact coefficients) against
///   e/(2(1+x)) + int g/((1+x)(1+x-s)) - int g/(s(1+x-s)) (s/(1+x))^m.
[[nodiscard]] IdentityCheck sigma_decomposition_check(int m, const Rational& x, const Precision& prec = {});

/// e S_m(x) (exact coefficients) against
///   e/(2(x+11/12)) + int g (t-1/12)/(t(1+x-t)(x+11/12)) (1 - r^{m-1}) dt
///   + sum_{k=2}^{m} (-1)^{k-1} 12/(12x+11)^k,   r = (t-1/12)/(x+11/12).
[[nodiscard]] IdentityCheck S_decomposition_check(int m, const Rational& x, const Precision& prec = {});

/// e (S_m(x) - sigma_m(x)) against the combined single-integral form of the
/// difference of the two decompositions above.
[[nodiscard]] IdentityCheck difference_decomposition_check(int m, const Rational& x,
                                                           const Precision& prec = {});

/// Scientific rendering with `digits` places after the decimal point.
[[nodiscard]] std::string format_real(const Real& value, int digits = 17);

}  // namespace carleman::quad
