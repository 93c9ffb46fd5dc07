#pragma once

/**
 * @file harness.hpp
 * @brief Empirical check of the refined Carleman inequalities
 *
 *   sum_n (a_1...a_n)^{1/n} < e sum_n (1 - sum_{k<=m} c_k/(n + center)^k) a_n
 *
 * with (c, center) = (b, 1) or (d, 11/12), on truncated sequences.
 */

#include "carleman/quadrature.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace carleman::harness {

using quad::Real;

enum class Family { PowerDecay, Geometric, Custom };
enum class Center { One, ElevenTwelfths };

[[nodiscard]] std::string_view to_string(Center center);

struct SequenceSpec {
    Family family = Family::PowerDecay;
    double parameter = 2.0;       // p > 1 for power decay, r in (0, 1) for geometric
    std::vector<double> custom;   // used when family == Custom
    std::size_t terms = 100;

    static SequenceSpec power(double p, std::size_t terms);
    static SequenceSpec geometric(double r, std::size_t terms);
    static SequenceSpec from_values(std::vector<double> values);
    /// One value per line; blank lines and '#' comments skipped. Throws
    /// std::invalid_argument on negative, non-finite or unparsable entries.
    static SequenceSpec from_file(const std::filesystem::path& path);
    /// "power:p", "geom:r" or "file:PATH"; terms ignored for files.
    static SequenceSpec parse(std::string_view family, std::size_t terms);

    /// Throws std::invalid_argument when the spec is invalid.
    void validate() const;
    /// a_1..a_N as working-precision reals.
    [[nodiscard]] std::vector<Real> generate() const;
};

// The operations below run at `prec` working precision.

/// sum_{n<=N} (a_1...a_n)^{1/n}, via running log sums. Throws
/// std::domain_error for an all-zero sequence.
[[nodiscard]] Real geometric_mean_sum(const SequenceSpec& seq, const quad::Precision& prec = {});

/// e sum_n w_m(n) a_n. Weights are exact rationals rounded once.
[[nodiscard]] Real refined_rhs(const SequenceSpec& seq, int m, Center center, const quad::Precision& prec = {});

/// Exact weight 1 - sum_{k<=m} c_k/(n + center)^k.
[[nodiscard]] exact::Rational weight(long n, int m, Center center);

struct ReportRow {
    std::size_t N = 0;
    Real lhs;
    Real rhs_one;
    Real rhs_eleven_twelfths;
    bool lhs_below_one = false;
    bool lhs_below_eleven_twelfths = false;
    bool ordered = false;  // rhs_eleven_twelfths <= rhs_one
    Real rhs_ratio;        // rhs_eleven_twelfths / rhs_one
};

/// One row per truncation N in `truncations` (each <= seq.terms).
[[nodiscard]] std::vector<ReportRow> inequality_report(const SequenceSpec& seq, int m,
                                                       const std::vector<std::size_t>& truncations,
                                                       const quad::Precision& prec = {});

}  // namespace carleman::harness
