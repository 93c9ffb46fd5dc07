#include "carleman/certify.hpp"

#include "carleman/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace carleman::certify {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::AllCoeffsNonneg: return "all_coeffs_nonneg";
        case Method::SturmNoRoots: return "sturm_no_roots";
        case Method::None: break;
    }
    return "none";
}

namespace {

const RatPoly& t_plus_twelfth() {
    static const RatPoly p{Rational(1, 12), Rational(1)};
    return p;
}

}  // namespace

RatPoly numerator_from_tables(const coeffs::CoeffTable& b, const coeffs::CoeffTable& d, int m) {
    if (m < 1) throw std::domain_error("numerator: m must be >= 1");
    if (b.size() < static_cast<std::size_t>(m) || d.size() < static_cast<std::size_t>(m)) {
        throw std::domain_error("numerator: coefficient tables shorter than m");
    }
    // Powers (t + 1/12)^j for j = 0..m.
    std::vector<RatPoly> shifted_powers{RatPoly::constant(1)};
    for (int j = 1; j <= m; ++j) shifted_powers.push_back(shifted_powers.back() * t_plus_twelfth());

    RatPoly positive_part;
    RatPoly negative_part;
    for (int k = 1; k <= m; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        positive_part += RatPoly::monomial(d.at(uk), m - k);
        negative_part += shifted_powers[static_cast<std::size_t>(m - k)] * b.at(uk);
    }
    return positive_part * shifted_powers[static_cast<std::size_t>(m)] - negative_part * RatPoly::monomial(1, m);
}

RatPoly build_numerator(int m) {
    if (m < 1) throw std::domain_error("build_numerator: m must be >= 1");
    auto& store = coeffs::shared_store();
    const auto count = static_cast<std::size_t>(m);
    RatPoly n = numerator_from_tables(store.get(coeffs::Kind::B, count), store.get(coeffs::Kind::D, count), m);
    if (n.degree() >= m) {
        throw std::logic_error("coefficient tables corrupted: N_" + std::to_string(m) + " keeps degree " +
                               std::to_string(n.degree()) + " term " + n.leading().to_string() +
                               " (degrees m..2m-1 must cancel)");
    }
    return n;
}

Certificate certify_positivity(int m) {
    if (m < 1) throw std::domain_error("certify_positivity: m must be >= 1");
    Certificate cert;
    cert.m = m;
    cert.numerator = build_numerator(m);
    for (int k = m; k <= 2 * m - 1; ++k) {
        if (cert.numerator.coeff(k).is_zero()) cert.vanished_degrees.push_back(k);
    }
    if (cert.numerator.is_zero()) {
        cert.diagnostics.emplace_back("numerator vanishes identically; delta_m is zero, not positive");
        return cert;
    }
    cert.t_power_removed = cert.numerator.trailing_degree();
    cert.reduced = cert.numerator.strip_t_power();
    cert.shifted = cert.reduced.taylor_shift(series::eleven_twelfths());
    cert.sample_value = cert.shifted(Rational(1));
    cert.positive_roots_found = exact::sturm_positive_root_count(cert.shifted);

    const auto coeffs = cert.shifted.coefficients();
    const bool all_nonneg =
        std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.sign() >= 0; });
    if (all_nonneg) {
        cert.method = Method::AllCoeffsNonneg;
    } else if (cert.positive_roots_found == 0) {
        cert.method = Method::SturmNoRoots;
        cert.diagnostics.emplace_back("shifted numerator has a negative coefficient; decided by Sturm count");
    } else {
        cert.diagnostics.emplace_back("shifted numerator has " + std::to_string(cert.positive_roots_found) +
                                      " root(s) in u > 0");
    }
    // Both tiers also need the exact sample at t = 23/12 to be positive.
    if (cert.sample_value.sign() <= 0) {
        cert.diagnostics.emplace_back("sample value at u = 1 is not positive: " + cert.sample_value.to_string());
    }
    cert.certified = cert.method != Method::None && cert.positive_roots_found == 0 && cert.sample_value.sign() > 0;
    if (!cert.certified) cert.method = Method::None;
    return cert;
}

namespace {

RatPoly poly_of(std::initializer_list<std::pair<int, Rational>> terms) {
    RatPoly p;
    for (const auto& [deg, c] : terms) p += RatPoly::monomial(c, deg);
    return p;
}

Rational R(long p, long q) { return Rational(p, q); }

}  // namespace

Step3Report verify_step3_tables() {
    const auto b = coeffs::b_table(4);
    const auto d = coeffs::d_table(4);
    const RatPoly& s = t_plus_twelfth();
    const auto t = [](int deg) { return RatPoly::monomial(1, deg); };

    Step3Report report;
    auto add_row = [&](std::string label, const Rational& printed_mult, const Rational& engine_mult,
                       const RatPoly& factors, RatPoly printed) {
        ExpansionRow row;
        row.label = std::move(label);
        row.computed = factors * printed_mult;
        row.printed = std::move(printed);
        row.matches = row.computed == row.printed;
        row.printed_multiplier = printed_mult;
        row.engine_multiplier = engine_mult;
        row.multiplier_matches = printed_mult == engine_mult;
        report.expansions.push_back(std::move(row));
    };

    add_row("(1/2) t^3 (t+1/12)^4", R(1, 2), d.at(1), t(3) * s.pow(4),
            poly_of({{7, R(1, 2)}, {6, R(1, 6)}, {5, R(1, 48)}, {4, R(1, 864)}, {3, R(1, 41472)}}));
    add_row("(5/288) t (t+1/12)^4", R(5, 288), d.at(3), t(1) * s.pow(4),
            poly_of({{5, R(5, 288)}, {4, R(5, 864)}, {3, R(5, 6912)}, {2, R(5, 124416)}, {1, R(5, 5971968)}}));
    add_row("(139/17280) (t+1/12)^4", R(139, 17280), d.at(4), s.pow(4),
            poly_of({{4, R(139, 17280)},
                     {3, R(139, 51840)},
                     {2, R(139, 414720)},
                     {1, R(139, 7464960)},
                     {0, R(139, 358318080)}}));
    add_row("-(1/2) t^4 (t+1/12)^3", R(-1, 2), -b.at(1), t(4) * s.pow(3),
            poly_of({{7, R(-1, 2)}, {6, R(-1, 8)}, {5, R(-1, 96)}, {4, R(-1, 3456)}}));
    add_row("-(1/24) t^4 (t+1/12)^2", R(-1, 24), -b.at(2), t(4) * s.pow(2),
            poly_of({{6, R(-1, 24)}, {5, R(-1, 144)}, {4, R(-1, 3456)}}));
    add_row("-(1/48) t^4 (t+1/12)", R(-1, 48), -b.at(3), t(4) * s,
            poly_of({{5, R(-1, 48)}, {4, R(-1, 576)}}));
    add_row("-(73/5670) t^4", -PrintedValues::b4(), -b.at(4), t(4), poly_of({{4, -PrintedValues::b4()}}));

    report.all_expansions_match = std::all_of(report.expansions.begin(), report.expansions.end(),
                                              [](const ExpansionRow& r) { return r.matches; });

    // Consolidation: exact N_4 against the same sum with the printed b_4.
    const RatPoly exact = numerator_from_tables(b, d, 4);
    auto b_printed = b;
    b_printed.values[3] = PrintedValues::b4();
    const RatPoly with_printed = numerator_from_tables(b_printed, d, 4);
    const Rational printed_results[8] = {
        R(139, 358318080),
        R(5, 5971968) + R(139, 7464960),
        R(5, 124416) + R(139, 414720),
        R(1, 41472) + R(5, 6912) + R(139, 51840),
        PrintedValues::n4_degree4(),
        Rational(0),
        Rational(0),
        Rational(0),
    };
    for (int deg = 7; deg >= 0; --deg) {
        ConsolidationRow row;
        row.degree = deg;
        row.exact_with_recursion_b4 = exact.coeff(deg);
        row.exact_with_printed_b4 = with_printed.coeff(deg);
        row.printed = printed_results[deg];
        row.printed_matches = row.printed == row.exact_with_recursion_b4;
        report.consolidation.push_back(row);
    }

    // The degree-4 row in units of 1/1814400.
    auto& det = report.degree4;
    det.printed_numerators = {2100, 10500, 14630, -525, -525, -3150, -23360};
    det.printed_numerator_sum = std::accumulate(det.printed_numerators.begin(), det.printed_numerators.end(), 0L);
    det.printed_total = 2670;
    const Rational unit(1814400);
    for (const auto& row : report.expansions) {
        Rational c = row.label.rfind("-(73/5670)", 0) == 0 ? -b.at(4) : row.computed.coeff(4);
        const Rational scaled = c * unit;
        if (!scaled.is_integer()) throw std::logic_error("degree-4 term not a multiple of 1/1814400");
        det.exact_numerators.push_back(scaled.numerator().get_si());
    }
    return report;
}

}  // namespace carleman::certify
