#pragma once

/**
 * @file certify.hpp
 * @brief Exact positivity certificates for delta_m(x) = S_m(x) - sigma_m(x) on x > 0.
 *
 * With t = x + 11/12 (so x + 1 = t + 1/12),
 *
 *   delta_m(x) = N_m(t) / (t^m (t + 1/12)^m),
 *   N_m(t) = sum_k d_k t^{m-k} (t + 1/12)^m - sum_k b_k t^m (t + 1/12)^{m-k}.
 *
 * The denominator is positive on t > 11/12, so delta_m > 0 on x > 0 iff N_m is
 * positive there, iff N_m(u + 11/12) is positive on u > 0. Positivity is
 * decided exactly: nonnegative shifted coefficients suffice, otherwise a
 * Sturm root count of zero plus one positive sample does.
 */

#include "carleman/coeffs.hpp"
#include "carleman/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace carleman::certify {

using exact::Rational;
using exact::RatPoly;

enum class Method { AllCoeffsNonneg, SturmNoRoots, None };

[[nodiscard]] std::string_view to_string(Method method);

struct Certificate {
    int m = 0;
    RatPoly numerator;          // N_m(t), over t^m (t + 1/12)^m
    int t_power_removed = 0;    // largest j with t^j | N_m
    RatPoly reduced;            // N_m / t^j, over t^(m-j) (t + 1/12)^m
    RatPoly shifted;            // reduced(u + 11/12)
    std::vector<int> vanished_degrees;
    Method method = Method::None;
    int positive_roots_found = 0;
    Rational sample_value;      // shifted(1), i.e. at t = 23/12
    bool certified = false;
    std::vector<std::string> diagnostics;
};

/// N_m from explicit tables (each with at least m entries). Does not check
/// the top-order cancellation; see build_numerator.
[[nodiscard]] RatPoly numerator_from_tables(const coeffs::CoeffTable& b, const coeffs::CoeffTable& d, int m);

/// N_m from the exact tables. Throws std::logic_error if any coefficient of
/// degree m..2m-1 is nonzero (that can only mean corrupted b/d values).
[[nodiscard]] RatPoly build_numerator(int m);

/// Certifies delta_m > 0 on x > 0, or returns certified = false with
/// diagnostics. Throws std::domain_error for m < 1.
[[nodiscard]] Certificate certify_positivity(int m);

/// Replication of the published m = 4 hand expansion.
struct ExpansionRow {
    std::string label;        // e.g. "(1/2) t^3 (t+1/12)^4"
    RatPoly computed;         // exact product of the printed multiplier and factors
    RatPoly printed;          // expansion as printed
    bool matches = false;
    Rational printed_multiplier;
    Rational engine_multiplier;  // the same coefficient from the exact tables
    bool multiplier_matches = false;
};

struct ConsolidationRow {
    int degree = 0;
    Rational exact_with_recursion_b4;  // coefficient of N_4 from the exact tables
    Rational exact_with_printed_b4;    // same sum using the printed b_4
    Rational printed;                  // printed result for this degree
    bool printed_matches = false;
};

struct Step4Degree4Detail {
    std::vector<long> printed_numerators;  // over 1814400, as printed
    std::vector<long> exact_numerators;    // over 1814400, using the recursion b_4
    long printed_numerator_sum = 0;        // actual sum of the printed entries
    long printed_total = 0;                // total as printed
};

struct Step3Report {
    std::vector<ExpansionRow> expansions;
    std::vector<ConsolidationRow> consolidation;  // degrees 7 down to 0
    Step4Degree4Detail degree4;
    bool all_expansions_match = false;
};

[[nodiscard]] Step3Report verify_step3_tables();

/// Printed values from the published derivation that disagree with exact
/// recomputation.
struct PrintedValues {
    static Rational b4() { return Rational(73, 5670); }
    static Rational n4_degree4() { return Rational(89, 60480); }
};

}  // namespace carleman::certify
