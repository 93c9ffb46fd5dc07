#pragma once

/**
 * @file series.hpp
 * @brief Partial sums of the two correction series and their difference.
 *
 *   sigma_m(x) = sum_{k=1}^{m} b_k / (1 + x)^k
 *   S_m(x)     = sum_{k=1}^{m} d_k / (x + 11/12)^k
 *   delta_m(x) = S_m(x) - sigma_m(x)
 *
 * All inequality-bearing evaluations are exact over the rationals. Floating
 * variants exist for reporting only.
 */

#include "carleman/coeffs.hpp"
#include "carleman/rational.hpp"

#include <vector>

namespace carleman::series {

using exact::Rational;

/// The shifted center 11/12.
[[nodiscard]] const Rational& eleven_twelfths();

struct SeriesPoint {
    int m = 1;
    Rational x;
    Rational sigma;
    Rational S;
    Rational delta;
};

// Each operation throws std::domain_error for m < 1 or x <= 0.
[[nodiscard]] Rational eval_sigma(int m, const Rational& x);
[[nodiscard]] Rational eval_S(int m, const Rational& x);
[[nodiscard]] Rational delta(int m, const Rational& x);
[[nodiscard]] SeriesPoint eval_point(int m, const Rational& x);

// Same, over caller-provided tables (must hold at least m entries).
[[nodiscard]] Rational eval_sigma(const coeffs::CoeffTable& b, int m, const Rational& x);
[[nodiscard]] Rational eval_S(const coeffs::CoeffTable& d, int m, const Rational& x);

[[nodiscard]] double eval_sigma_float(int m, double x);
[[nodiscard]] double eval_S_float(int m, double x);

/// Delta_1 in closed form: (1/24) / ((x + 11/12)(x + 1)).
[[nodiscard]] Rational delta1_closed_form(const Rational& x);
/// Delta_2 in closed form: 1 / (288 (1 + x)^2 (x + 11/12)).
[[nodiscard]] Rational delta2_closed_form(const Rational& x);

/// Non-integral prefix of the odd-m decomposition:
///   1/(x + 11/12) - 1/(x + 1) + sum_{k=2}^{m} (-1)^{k-1} 12 / (12x + 11)^k.
/// Throws std::domain_error for even m.
[[nodiscard]] Rational odd_prefix(int m, const Rational& x);

struct TailComparison {
    Rational sigma_tail;  // sum_{k=m+1}^{K} b_k / (1 + x)^k
    Rational S_tail;      // sum_{k=m+1}^{K} d_k / (x + 11/12)^k
    int negative_d_terms = 0;  // count of d_k < 0 for m < k <= K
};

/// Truncated tails. Throws std::domain_error when K <= m.
[[nodiscard]] TailComparison tail_compare(int m, const Rational& x, int K);

/// t/(1+x) > (t - 1/12)/(x + 11/12), exactly. Requires 0 < t <= 1, x > 0.
[[nodiscard]] bool cross_bound_check(const Rational& t, const Rational& x);

/// `points` log-spaced rationals from x_min to x_max inclusive. Endpoints are
/// exact; interior points are rounded to 12 significant decimal digits.
[[nodiscard]] std::vector<Rational> log_grid(const Rational& x_min, const Rational& x_max, int points);

}  // namespace carleman::series
