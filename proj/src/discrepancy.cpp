#include "carleman/discrepancy.hpp"

#include "carleman/certify.hpp"
#include "carleman/coeffs.hpp"

#include <algorithm>
#include <sstream>

namespace carleman::report {

using exact::Rational;

DiscrepancyReport discrepancy_report() {
    DiscrepancyReport out;
    const auto b = coeffs::b_table(4);
    const auto d = coeffs::d_table(4);
    const Rational printed_b4 = certify::PrintedValues::b4();
    const Rational printed_d4(139, 17280);

    std::vector<Rational> b_printed = b.values;
    b_printed[3] = printed_b4;
    const Rational d4_from_recursion = coeffs::d_from_b(b.values, 4);
    const Rational d4_from_printed = coeffs::d_from_b(b_printed, 4);
    out.b4_resolved = d4_from_recursion == printed_d4 && d4_from_printed != printed_d4;

    {
        DiscrepancyRow row{"b_4", b.at(4).to_string(), printed_b4.to_string(), "", b.at(4) == printed_b4};
        row.note = "d_4 consistency check favors " + (out.b4_resolved ? b.at(4).to_string() : std::string("neither")) +
                   ": d_4 from recursion b_4 = " + d4_from_recursion.to_string() + ", from printed b_4 = " +
                   d4_from_printed.to_string() + ", printed d_4 = " + printed_d4.to_string();
        out.rows.push_back(row);
    }

    const auto step3 = certify::verify_step3_tables();
    const auto& deg4 = *std::find_if(step3.consolidation.begin(), step3.consolidation.end(),
                                     [](const certify::ConsolidationRow& r) { return r.degree == 4; });
    out.rows.push_back({"N_4 coefficient of t^4", deg4.exact_with_recursion_b4.to_string(), deg4.printed.to_string(),
                        "with printed b_4 and exact row arithmetic: " + deg4.exact_with_printed_b4.to_string(),
                        deg4.printed_matches});

    const auto& det = step3.degree4;
    out.rows.push_back({"t^4 row, 139/17280 in units of 1/1814400", std::to_string(det.exact_numerators[2]),
                        std::to_string(det.printed_numerators[2]), "139*105 = " + std::to_string(139 * 105),
                        det.exact_numerators[2] == det.printed_numerators[2]});
    out.rows.push_back({"t^4 row, sum of printed entries (units of 1/1814400)",
                        std::to_string(det.printed_numerator_sum), std::to_string(det.printed_total),
                        "the printed entries themselves do not add up to the printed total",
                        det.printed_numerator_sum == det.printed_total});

    const auto cert = certify::certify_positivity(4);
    const auto surviving = cert.numerator.coefficients();
    const bool all_positive =
        std::all_of(surviving.begin(), surviving.end(), [](const Rational& c) { return c.sign() > 0; });
    out.delta4_positive = cert.certified && all_positive && cert.numerator.degree() == 3;
    out.rows.push_back({"conclusion", out.delta4_positive ? "Delta_4 > 0" : "Delta_4 NOT certified",
                        "Delta_4 > 0",
                        out.delta4_positive ? "Delta_4 > 0 unaffected; surviving coefficients all positive"
                                            : "surviving coefficients are not all positive",
                        out.delta4_positive});
    return out;
}

std::string render_text(const DiscrepancyReport& report) {
    std::ostringstream os;
    os << "item | exact | printed | note\n";
    for (const auto& row : report.rows) {
        os << row.item << " | " << row.exact << " | " << row.printed << " | " << row.note << "\n";
    }
    return os.str();
}

}  // namespace carleman::report
