#include "carleman/harness.hpp"

#include "carleman/coeffs.hpp"
#include "carleman/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace carleman::harness {

using exact::Rational;

std::string_view to_string(Center center) { return center == Center::One ? "1" : "11/12"; }

SequenceSpec SequenceSpec::power(double p, std::size_t terms) {
    return {Family::PowerDecay, p, {}, terms};
}

SequenceSpec SequenceSpec::geometric(double r, std::size_t terms) {
    return {Family::Geometric, r, {}, terms};
}

SequenceSpec SequenceSpec::from_values(std::vector<double> values) {
    SequenceSpec spec{Family::Custom, 0.0, std::move(values), 0};
    spec.terms = spec.custom.size();
    spec.validate();
    return spec;
}

SequenceSpec SequenceSpec::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file " + path.string());
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": not a number: '" + token +
                                        "'");
        }
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": entries must be finite and nonnegative");
        }
        values.push_back(v);
    }
    return from_values(std::move(values));
}

SequenceSpec SequenceSpec::parse(std::string_view family, std::size_t terms) {
    const auto colon = family.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("sequence family must be power:p, geom:r or file:PATH");
    }
    const std::string kind(family.substr(0, colon));
    const std::string arg(family.substr(colon + 1));
    if (kind == "file") return from_file(arg);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(arg, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (arg.empty() || used != arg.size()) throw std::invalid_argument("bad family parameter: '" + arg + "'");
    SequenceSpec spec;
    if (kind == "power") {
        spec = power(value, terms);
    } else if (kind == "geom") {
        spec = geometric(value, terms);
    } else {
        throw std::invalid_argument("unknown sequence family '" + kind + "'");
    }
    spec.validate();
    return spec;
}

void SequenceSpec::validate() const {
    if (terms < 1) throw std::invalid_argument("sequence needs at least one term");
    switch (family) {
        case Family::PowerDecay:
            if (!(parameter > 1.0) || !std::isfinite(parameter)) {
                throw std::invalid_argument("power decay needs p > 1");
            }
            break;
        case Family::Geometric:
            if (!(parameter > 0.0 && parameter < 1.0)) throw std::invalid_argument("geometric needs 0 < r < 1");
            break;
        case Family::Custom:
            if (custom.size() != terms) throw std::invalid_argument("custom sequence length mismatch");
            for (double v : custom) {
                if (!std::isfinite(v) || v < 0.0) {
                    throw std::invalid_argument("custom entries must be finite and nonnegative");
                }
            }
            if (std::none_of(custom.begin(), custom.end(), [](double v) { return v > 0.0; })) {
                throw std::domain_error("all-zero sequence");
            }
            break;
    }
}

std::vector<Real> SequenceSpec::generate() const {
    validate();
    std::vector<Real> a;
    a.reserve(terms);
    const Real param(parameter);
    for (std::size_t n = 1; n <= terms; ++n) {
        switch (family) {
            case Family::PowerDecay: a.push_back(pow(Real(n), -param)); break;
            case Family::Geometric: a.push_back(pow(param, static_cast<long>(n))); break;
            case Family::Custom: a.emplace_back(custom[n - 1]); break;
        }
    }
    return a;
}

Rational weight(long n, int m, Center center) {
    if (n < 1) throw std::domain_error("weight: n must be >= 1");
    const Rational x(n);
    const Rational correction = center == Center::One ? series::eval_sigma(m, x) : series::eval_S(m, x);
    return Rational(1) - correction;
}

namespace {

struct Prefix {
    std::vector<Real> lhs;        // running sum of geometric means
    std::vector<Real> rhs_one;    // running sum of w_1(n) a_n
    std::vector<Real> rhs_twelve; // running sum of w_{11/12}(n) a_n
};

Prefix prefix_sums(const SequenceSpec& seq, int m, std::size_t upto, bool with_rhs, Center only = Center::One,
                   bool both = true) {
    const std::vector<Real> a = seq.generate();
    Prefix out;
    out.lhs.reserve(upto);
    Real log_sum = 0;
    bool hit_zero = false;
    Real gm_sum = 0;
    Real rhs1 = 0;
    Real rhs2 = 0;
    const auto b = coeffs::shared_store().get(coeffs::Kind::B, static_cast<std::size_t>(m));
    const auto d = coeffs::shared_store().get(coeffs::Kind::D, static_cast<std::size_t>(m));
    for (std::size_t n = 1; n <= upto; ++n) {
        const Real& an = a[n - 1];
        if (an == 0) hit_zero = true;
        if (!hit_zero) {
            log_sum += log(an);
            gm_sum += exp(log_sum / static_cast<long>(n));
        }
        out.lhs.push_back(gm_sum);
        if (!with_rhs) continue;
        const Rational x(static_cast<long>(n));
        if (both || only == Center::One) {
            rhs1 += quad::to_real(Rational(1) - series::eval_sigma(b, m, x)) * an;
            out.rhs_one.push_back(rhs1);
        }
        if (both || only == Center::ElevenTwelfths) {
            rhs2 += quad::to_real(Rational(1) - series::eval_S(d, m, x)) * an;
            out.rhs_twelve.push_back(rhs2);
        }
    }
    return out;
}

}  // namespace

Real geometric_mean_sum(const SequenceSpec& seq, const quad::Precision& prec) {
    quad::PrecisionScope scope(prec);
    seq.validate();
    return prefix_sums(seq, 1, seq.terms, false).lhs.back();
}

Real refined_rhs(const SequenceSpec& seq, int m, Center center, const quad::Precision& prec) {
    if (m < 1) throw std::domain_error("refined_rhs: m must be >= 1");
    quad::PrecisionScope scope(prec);
    seq.validate();
    const Prefix p = prefix_sums(seq, m, seq.terms, true, center, false);
    const Real& sum = center == Center::One ? p.rhs_one.back() : p.rhs_twelve.back();
    return quad::e_real() * sum;
}

std::vector<ReportRow> inequality_report(const SequenceSpec& seq, int m, const std::vector<std::size_t>& truncations,
                                         const quad::Precision& prec) {
    if (m < 1) throw std::domain_error("inequality_report: m must be >= 1");
    seq.validate();
    for (std::size_t N : truncations) {
        if (N < 1 || N > seq.terms) throw std::domain_error("truncation outside 1..terms");
    }
    if (truncations.empty()) return {};
    quad::PrecisionScope scope(prec);
    const std::size_t upto = *std::max_element(truncations.begin(), truncations.end());
    const Prefix p = prefix_sums(seq, m, upto, true);
    const Real e = quad::e_real();
    std::vector<ReportRow> rows;
    for (std::size_t N : truncations) {
        ReportRow row;
        row.N = N;
        row.lhs = p.lhs[N - 1];
        row.rhs_one = e * p.rhs_one[N - 1];
        row.rhs_eleven_twelfths = e * p.rhs_twelve[N - 1];
        row.lhs_below_one = row.lhs < row.rhs_one;
        row.lhs_below_eleven_twelfths = row.lhs < row.rhs_eleven_twelfths;
        row.ordered = row.rhs_eleven_twelfths <= row.rhs_one;
        row.rhs_ratio = row.rhs_eleven_twelfths / row.rhs_one;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace carleman::harness
