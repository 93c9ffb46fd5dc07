#pragma once

/**
 * @file discrepancy.hpp
 * @brief Side-by-side comparison of printed constants with exact recomputation.
 *
 * Nothing here feeds back into the engine; the printed values are data.
 */

#include <string>
#include <vector>

namespace carleman::report {

struct DiscrepancyRow {
    std::string item;
    std::string exact;
    std::string printed;
    std::string note;
    bool agrees = false;
};

struct DiscrepancyReport {
    std::vector<DiscrepancyRow> rows;
    /// The recursion b_4 reproduces the printed d_4 and the printed b_4 does not.
    bool b4_resolved = false;
    /// delta_4 > 0 certified with all surviving numerator coefficients positive.
    bool delta4_positive = false;
};

[[nodiscard]] DiscrepancyReport discrepancy_report();

/// Line-oriented rendering, one "item | exact | printed | note" row per line.
[[nodiscard]] std::string render_text(const DiscrepancyReport& report);

}  // namespace carleman::report
