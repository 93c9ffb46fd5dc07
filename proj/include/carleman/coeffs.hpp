#pragma once

/**
 * @file coeffs.hpp
 * @brief Exact correction coefficients b_k (center 1) and d_k (center 11/12).
 *
 *   (1 + 1/x)^x = e (1 - sum_k b_k / (x + 1)^k)
 *               = e (1 - sum_k d_k / (x + 11/12)^k)
 *
 * b_k comes from the rational recursion
 *   b_1 = 1/2,  b_{n+1} = (1/(n+1)) (1/(n+2) - sum_{k=1}^{n} b_k / (n+2-k)),
 * and d_n from the binomial transform of the b_k,
 *   d_n = 12^{-(n-1)} [ (-1)^{n-1}/2 + sum_{j=1}^{n-1} C(n-1, j) 12^j (-1)^{n-1-j} b_{j+1} ].
 */

#include "carleman/rational.hpp"

#include <cstddef>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carleman::coeffs {

using exact::Rational;

enum class Kind { B, D };
enum class Derivation { Recursion, BinomialTransform };

[[nodiscard]] std::string_view to_string(Kind kind);
[[nodiscard]] std::string_view to_string(Derivation derivation);

struct CoeffTable {
    Kind kind = Kind::B;
    Derivation derivation = Derivation::Recursion;
    std::vector<Rational> values;  // values[0] is the k = 1 entry

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    /// 1-based access; throws std::domain_error when k is out of range.
    [[nodiscard]] const Rational& at(std::size_t k) const;
};

/// [b_1, ..., b_count]. Throws std::domain_error when count < 1.
[[nodiscard]] CoeffTable b_table(std::size_t count);

/// [d_1, ..., d_count]. Throws std::domain_error when count < 1.
[[nodiscard]] CoeffTable d_table(std::size_t count);

/// d_n from an arbitrary b prefix (b[0] = b_1, needs b_2..b_n). Used to
/// test which b values are consistent with a given d value.
[[nodiscard]] Rational d_from_b(std::span<const Rational> b, std::size_t n);

/// Correctly rounded decimal rendering of entry k with `digits` places.
[[nodiscard]] std::string coeff_decimal(const CoeffTable& table, std::size_t k, int digits);

/// Rational enclosure [lo, hi] of a constant.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Enclosure of e from the truncated factorial series with its tail bound.
[[nodiscard]] RationalInterval e_bounds(int terms = 30);
/// Enclosure of 1 - 1/e derived from e_bounds.
[[nodiscard]] RationalInterval one_minus_inv_e_bounds(int terms = 30);

/// Process-wide append-only cache of both tables. Extending never changes
/// existing entries; returned tables are prefix copies.
class CoeffStore {
public:
    [[nodiscard]] CoeffTable get(Kind kind, std::size_t count);

private:
    std::mutex mutex_;
    CoeffTable b_{Kind::B, Derivation::Recursion, {}};
    CoeffTable d_{Kind::D, Derivation::BinomialTransform, {}};
};

[[nodiscard]] CoeffStore& shared_store();

}  // namespace carleman::coeffs
