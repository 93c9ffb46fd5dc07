#include "carleman/cli.hpp"

#include "carleman/certify.hpp"
#include "carleman/coeffs.hpp"
#include "carleman/discrepancy.hpp"
#include "carleman/harness.hpp"
#include "carleman/quadrature.hpp"
#include "carleman/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace carleman::cli {

namespace {

using exact::Rational;
using json = nlohmann::ordered_json;
using quad::Real;

constexpr int kShownDigits = 20;

struct CheckRow {
    std::string name;
    std::string computed;
    std::string reference;
    std::string abs_diff;
    bool pass = false;
};

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

void print_table(std::ostream& out, const std::vector<CheckRow>& rows) {
    std::size_t width = 8;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "identity" << "  " << std::setw(28) << "computed"
        << "  " << std::setw(28) << "reference" << "  " << std::setw(12) << "abs_diff" << "  result\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(28) << r.computed << "  "
            << std::setw(28) << r.reference << "  " << std::setw(12) << r.abs_diff << "  "
            << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; });
    out << "# " << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " passed\n";
}

std::string fmt(const Real& v, int digits = kShownDigits) { return quad::format_real(v, digits); }

CheckRow compare(std::string name, const quad::QuadResult& q, const Real& computed, const Real& reference,
                 double tol) {
    const Real diff = abs(computed - reference);
    return {std::move(name), fmt(computed), fmt(reference), fmt(diff, 3), q.converged && diff <= tol};
}

// Kernel moments, the reciprocal moment, the d_n integral formula and the
// h(x) representation.
std::vector<CheckRow> integral_checks(const quad::Precision& prec, int k_max) {
    std::vector<CheckRow> rows;
    const auto b = coeffs::b_table(static_cast<std::size_t>(std::max(k_max, 3)));
    const auto d = coeffs::d_table(12);
    quad::PrecisionScope scope(prec);
    const Real e = quad::e_real();

    const auto m2 = quad::moment(2, prec);
    rows.push_back(compare("int g = e/24", m2, m2.value, e / 24, 1e-10));
    const auto m3 = quad::moment(3, prec);
    rows.push_back(compare("int g s = e/48", m3, m3.value, e / 48, 1e-10));
    const auto rec = quad::reciprocal_moment(prec);
    rows.push_back(compare("int g/s = e/2 - 1", rec, rec.value, e / 2 - 1, 1e-10));
    const auto mrec = quad::mirrored_reciprocal_moment(prec);
    rows.push_back(compare("int g/(1-s) = e/2 - 1", mrec, mrec.value, e / 2 - 1, 1e-10));

    std::vector<Real> moments;
    for (int k = 2; k <= k_max; ++k) {
        const auto q = quad::moment(k, prec);
        moments.push_back(q.value);
        rows.push_back(compare("moment(" + std::to_string(k) + ")/e = b_" + std::to_string(k), q, q.value / e,
                               quad::to_real(b.at(static_cast<std::size_t>(k))), 1e-10));
        const auto mirrored = quad::mirrored_moment(k, prec);
        rows.push_back(compare("mirrored moment(" + std::to_string(k) + ")", mirrored, mirrored.value, q.value,
                               2 * prec.target_abs_tol));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < moments.size(); ++i) decreasing = decreasing && moments[i] < moments[i - 1];
    rows.push_back({"moment(k) strictly decreasing in k", decreasing ? "yes" : "no", "yes", "-", decreasing});

    for (int n = 2; n <= 12; ++n) {
        const auto q = quad::d_numeric(n, prec);
        const Real exact = quad::to_real(d.at(static_cast<std::size_t>(n)));
        const Real diff = abs(q.value - exact);
        const bool ok = n == 2 ? diff <= 1e-10 : diff <= 1e-8 * abs(exact);
        rows.push_back({"d_numeric(" + std::to_string(n) + ") = d_" + std::to_string(n), fmt(q.value), fmt(exact),
                        fmt(diff, 3), q.converged && ok});
    }

    for (const char* xs : {"1/10", "1", "10"}) {
        const auto h = quad::h_identity_check(Rational::parse(xs), prec);
        rows.push_back({std::string("h(") + xs + ") representation", fmt(h.rhs), fmt(h.lhs), fmt(h.abs_diff, 3),
                        h.quad.converged && h.abs_diff <= 1e-10});
    }
    return rows;
}

std::vector<CheckRow> identity_checks(const quad::Precision& prec, const std::vector<int>& ms,
                                      const std::vector<Rational>& xs) {
    std::vector<CheckRow> rows;
    for (int m : ms) {
        for (const auto& x : xs) {
            const std::string tag = "(m=" + std::to_string(m) + ", x=" + x.to_string() + ")";
            const auto add = [&](const std::string& name, const quad::IdentityCheck& c) {
                rows.push_back({name + " " + tag, fmt(c.rhs), fmt(c.lhs), fmt(c.abs_diff, 3),
                                c.quad.converged && c.abs_diff <= 1e-9});
            };
            add("e*sigma_m decomposition", quad::sigma_decomposition_check(m, x, prec));
            add("e*S_m decomposition", quad::S_decomposition_check(m, x, prec));
            add("e*(S_m - sigma_m) decomposition", quad::difference_decomposition_check(m, x, prec));
        }
    }
    // Exact self-tests.
    for (const char* xs_text : {"1/1000", "1/3", "1", "7/2", "1000"}) {
        const Rational x = Rational::parse(xs_text);
        const Rational d1 = series::delta(1, x);
        const Rational c1 = series::delta1_closed_form(x);
        rows.push_back({std::string("Delta_1 closed form (x=") + xs_text + ")", d1.to_string(), c1.to_string(),
                        d1 == c1 ? "0" : "nonzero", d1 == c1});
        const Rational d2 = series::delta(2, x);
        const Rational c2 = series::delta2_closed_form(x);
        rows.push_back({std::string("Delta_2 closed form (x=") + xs_text + ")", d2.to_string(), c2.to_string(),
                        d2 == c2 ? "0" : "nonzero", d2 == c2});
    }
    bool cross_ok = true;
    for (long tn = 1; tn <= 12; ++tn) {
        for (const char* xs_text : {"1/1000", "1/2", "1", "1000"}) {
            cross_ok = cross_ok && series::cross_bound_check(Rational(tn, 12), Rational::parse(xs_text));
        }
    }
    rows.push_back({"t/(1+x) > (t-1/12)/(x+11/12) on sample", cross_ok ? "true" : "false", "true", "-", cross_ok});
    return rows;
}

json coeff_json(const coeffs::CoeffTable& table, int decimals) {
    json j;
    j["kind"] = std::string(coeffs::to_string(table.kind));
    json values = json::array();
    json decimal = json::array();
    for (std::size_t k = 1; k <= table.size(); ++k) {
        values.push_back(table.at(k).to_string());
        decimal.push_back(coeffs::coeff_decimal(table, k, decimals));
    }
    j["values"] = values;
    j["decimal"] = decimal;
    j["derivation"] = std::string(coeffs::to_string(table.derivation));
    return j;
}

void write_coeff_csv(std::ostream& out, const coeffs::CoeffTable& table, int decimals) {
    out << "k,exact,decimal\n";
    for (std::size_t k = 1; k <= table.size(); ++k) {
        out << k << "," << table.at(k) << "," << coeffs::coeff_decimal(table, k, decimals) << "\n";
    }
}

json certificate_json(const certify::Certificate& c) {
    json j;
    j["m"] = c.m;
    j["numerator"] = c.reduced.to_strings();
    j["numerator_t_power_removed"] = c.t_power_removed;
    j["full_numerator"] = c.numerator.to_strings();
    j["vanished_degrees"] = c.vanished_degrees;
    j["shifted"] = c.shifted.to_strings();
    j["method"] = std::string(certify::to_string(c.method));
    j["positive_roots_found"] = c.positive_roots_found;
    j["sample_value"] = c.sample_value.to_string();
    j["certified"] = c.certified;
    j["diagnostics"] = c.diagnostics;
    return j;
}

void certificate_summary(std::ostream& out, const certify::Certificate& c) {
    out << "m=" << c.m << " " << (c.certified ? "CERTIFIED" : "NOT CERTIFIED") << " method=" << certify::to_string(c.method)
        << " numerator degree=" << c.reduced.degree() << " (t^" << c.t_power_removed << " removed)"
        << " vanished=" << c.vanished_degrees.size() << "/" << c.m << " positive_roots=" << c.positive_roots_found
        << "\n";
}

struct VerifyOptions {
    int m_max = 20;
    std::string x_min = "1/1000";
    std::string x_max = "1000";
    int points = 200;
    bool use_float = false;
};

// CSV rows (m, x, sigma, S, delta, positive) and a trailing '#' summary line.
bool run_verify(std::ostream& out, const VerifyOptions& opt) {
    if (opt.m_max < 1) throw std::invalid_argument("--m-max must be >= 1");
    const auto grid = series::log_grid(Rational::parse(opt.x_min), Rational::parse(opt.x_max), opt.points);
    long failures = 0;
    long prefix_failures = 0;
    long rows = 0;
    out << "m,x,sigma,S,delta,positive\n";
    for (int m = 1; m <= opt.m_max; ++m) {
        for (const auto& x : grid) {
            ++rows;
            bool positive = false;
            if (opt.use_float) {
                const double xd = x.to_double();
                const double sigma = series::eval_sigma_float(m, xd);
                const double S = series::eval_S_float(m, xd);
                positive = S - sigma > 0.0;
                std::ostringstream row;
                row << std::setprecision(17) << m << "," << x.to_string() << "," << sigma << "," << S << ","
                    << S - sigma << "," << (positive ? "true" : "false") << "\n";
                out << row.str();
            } else {
                const auto p = series::eval_point(m, x);
                positive = p.delta.sign() > 0;
                out << m << "," << x << "," << p.sigma << "," << p.S << "," << p.delta << ","
                    << (positive ? "true" : "false") << "\n";
                if (m % 2 == 1 && series::odd_prefix(m, x).sign() <= 0) ++prefix_failures;
            }
            if (!positive) ++failures;
        }
    }
    out << "# summary: mode=" << (opt.use_float ? "float" : "exact") << " rows=" << rows
        << " nonpositive_delta=" << failures;
    if (!opt.use_float) out << " nonpositive_odd_prefix=" << prefix_failures;
    out << " result=" << (failures == 0 && prefix_failures == 0 ? "PASS" : "FAIL") << "\n";
    return failures == 0 && prefix_failures == 0;
}

struct CertifyOutcome {
    json certificates = json::array();
    std::string summary;
    bool ok = true;
};

CertifyOutcome run_certify(int m_lo, int m_hi) {
    CertifyOutcome outcome;
    std::ostringstream summary;
    for (int m = m_lo; m <= m_hi; ++m) {
        const auto c = certify::certify_positivity(m);
        outcome.certificates.push_back(certificate_json(c));
        certificate_summary(summary, c);
        outcome.ok = outcome.ok && c.certified;
    }
    outcome.summary = summary.str();
    return outcome;
}

struct CarlemanOptions {
    std::string family = "power:2";
    std::size_t terms = 10000;
    int m = 4;
    std::vector<std::size_t> sweep;
};

bool run_carleman(std::ostream& out, const CarlemanOptions& opt, const quad::Precision& prec) {
    const auto seq = harness::SequenceSpec::parse(opt.family, opt.terms);
    std::vector<std::size_t> sweep = opt.sweep;
    if (sweep.empty()) {
        for (std::size_t n = 10; n < seq.terms; n *= 10) sweep.push_back(n);
        sweep.push_back(seq.terms);
    }
    const auto rows = harness::inequality_report(seq, opt.m, sweep, prec);
    quad::PrecisionScope scope(prec);
    out << "N,lhs,rhs_center1,rhs_center11_12,lhs_lt_rhs_center1,lhs_lt_rhs_center11_12,rhs_ordered,rhs_ratio\n";
    bool ok = true;
    for (const auto& r : rows) {
        out << r.N << "," << fmt(r.lhs) << "," << fmt(r.rhs_one) << "," << fmt(r.rhs_eleven_twelfths) << ","
            << (r.lhs_below_one ? "true" : "false") << "," << (r.lhs_below_eleven_twelfths ? "true" : "false") << ","
            << (r.ordered ? "true" : "false") << "," << fmt(r.rhs_ratio) << "\n";
        ok = ok && r.lhs_below_one && r.lhs_below_eleven_twelfths && r.ordered;
    }
    return ok;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

void emit(std::ostream& out, const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file(out_path, content);
    }
}

void add_precision_flags(CLI::App* cmd, quad::Precision& prec) {
    cmd->add_option("--digits", prec.working_digits, "working precision in decimal digits (>= 25)")
        ->capture_default_str();
    cmd->add_option("--tol", prec.target_abs_tol, "absolute quadrature tolerance")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and high-precision checks for the refined Carleman correction series"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "carleman 1.0.0");

    quad::Precision prec;
    std::string format = "json";
    std::string out_path;

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "exact coefficient tables b_k or d_k");
    std::string kind = "b";
    int count = 10;
    int decimals = 20;
    coeffs_cmd->add_option("--kind", kind, "b or d")->check(CLI::IsMember({"b", "d"}))->capture_default_str();
    coeffs_cmd->add_option("--count", count, "number of coefficients")->check(CLI::PositiveNumber)->capture_default_str();
    coeffs_cmd->add_option("--decimals", decimals, "digits after the decimal point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    coeffs_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    coeffs_cmd->add_option("--out", out_path, "write to file instead of stdout");

    // check-integrals
    auto* integrals_cmd = app.add_subcommand("check-integrals", "quadrature checks of the kernel identities");
    int k_max = 20;
    add_precision_flags(integrals_cmd, prec);
    integrals_cmd->add_option("--k-max", k_max, "largest moment index")->check(CLI::Range(3, 60))->capture_default_str();

    // identities
    auto* identities_cmd = app.add_subcommand("identities", "decomposition identities and exact closed forms");
    std::vector<int> id_ms{2, 3, 8, 10};
    std::vector<std::string> id_xs{"1/4", "1", "2", "100"};
    add_precision_flags(identities_cmd, prec);
    identities_cmd->add_option("--m", id_ms, "values of m (>= 2)")->delimiter(',')->capture_default_str();
    identities_cmd->add_option("--x", id_xs, "values of x (> 0, rational or decimal)")
        ->delimiter(',')
        ->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "grid sweep of S_m(x) - sigma_m(x) > 0");
    VerifyOptions vopt;
    verify_cmd->add_option("--m-max", vopt.m_max, "largest m")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--x-min", vopt.x_min, "grid start")->capture_default_str();
    verify_cmd->add_option("--x-max", vopt.x_max, "grid end")->capture_default_str();
    verify_cmd->add_option("--points", vopt.points, "grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
    auto* exact_flag = verify_cmd->add_flag("--exact", "exact rational evaluation (default)");
    auto* float_flag = verify_cmd->add_flag("--float", vopt.use_float, "double precision evaluation (report only)");
    exact_flag->excludes(float_flag);
    verify_cmd->add_option("--out", out_path, "write CSV to file");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "exact positivity certificates");
    int cert_m = 0;
    int cert_m_max = 0;
    auto* m_opt = certify_cmd->add_option("--m", cert_m, "single m")->check(CLI::PositiveNumber);
    auto* mmax_opt = certify_cmd->add_option("--m-max", cert_m_max, "certify 1..M")->check(CLI::PositiveNumber);
    m_opt->excludes(mmax_opt);
    certify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    certify_cmd->add_option("--out", out_path, "write JSON to file");

    // carleman
    auto* carleman_cmd = app.add_subcommand("carleman", "refined Carleman inequalities on a test sequence");
    CarlemanOptions copt;
    carleman_cmd->add_option("--family", copt.family, "power:p | geom:r | file:PATH")->capture_default_str();
    carleman_cmd->add_option("--terms", copt.terms, "truncation length N")->check(CLI::PositiveNumber)->capture_default_str();
    carleman_cmd->add_option("--m", copt.m, "number of correction terms")->check(CLI::PositiveNumber)->capture_default_str();
    carleman_cmd->add_option("--sweep", copt.sweep, "truncations to report (default: powers of ten and N)")
        ->delimiter(',');
    carleman_cmd->add_option("--digits", prec.working_digits, "working precision in decimal digits")
        ->capture_default_str();
    carleman_cmd->add_option("--out", out_path, "write CSV to file");

    // report
    auto* report_cmd = app.add_subcommand("report", "bundle every check into one artifact directory");
    int report_m_max = 24;
    int report_points = 200;
    add_precision_flags(report_cmd, prec);
    report_cmd->add_option("--out", out_path, "artifact directory (omit to print the discrepancy report)");
    report_cmd->add_option("--m-max", report_m_max, "largest certified m")->check(CLI::PositiveNumber)->capture_default_str();
    report_cmd->add_option("--points", report_points, "grid points for the sweep")->check(CLI::Range(2, 1000000))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*coeffs_cmd) {
            const auto table = kind == "b" ? coeffs::b_table(static_cast<std::size_t>(count))
                                           : coeffs::d_table(static_cast<std::size_t>(count));
            std::ostringstream os;
            if (format == "csv") {
                write_coeff_csv(os, table, decimals);
            } else {
                os << coeff_json(table, decimals).dump(2) << "\n";
            }
            emit(out, out_path, os.str());
            return kOk;
        }
        if (*integrals_cmd) {
            prec.validate();
            const auto rows = integral_checks(prec, k_max);
            print_table(out, rows);
            return all_pass(rows) ? kOk : kCheckFailed;
        }
        if (*identities_cmd) {
            prec.validate();
            std::vector<Rational> xs;
            for (const auto& s : id_xs) xs.push_back(Rational::parse(s));
            const auto rows = identity_checks(prec, id_ms, xs);
            print_table(out, rows);
            return all_pass(rows) ? kOk : kCheckFailed;
        }
        if (*verify_cmd) {
            std::ostringstream os;
            const bool ok = run_verify(os, vopt);
            emit(out, out_path, os.str());
            if (!out_path.empty()) {
                const std::string text = os.str();
                out << text.substr(text.rfind("# summary"));
            }
            return ok ? kOk : kCheckFailed;
        }
        if (*certify_cmd) {
            if (cert_m == 0 && cert_m_max == 0) throw std::invalid_argument("certify needs --m or --m-max");
            const bool single = cert_m > 0;
            const auto outcome = single ? run_certify(cert_m, cert_m) : run_certify(1, cert_m_max);
            if (format == "text") {
                out << outcome.summary;
            } else {
                const json& payload = single ? outcome.certificates.front() : outcome.certificates;
                emit(out, out_path, payload.dump(2) + "\n");
                (out_path.empty() ? err : out) << outcome.summary;
            }
            return outcome.ok ? kOk : kCheckFailed;
        }
        if (*carleman_cmd) {
            prec.validate();
            std::ostringstream os;
            const bool ok = run_carleman(os, copt, prec);
            emit(out, out_path, os.str());
            return ok ? kOk : kCheckFailed;
        }
        if (*report_cmd) {
            prec.validate();
            const auto disc = report::discrepancy_report();
            const std::string disc_text = report::render_text(disc);
            if (out_path.empty()) {
                out << disc_text;
                return disc.b4_resolved && disc.delta4_positive ? kOk : kCheckFailed;
            }
            const std::filesystem::path dir(out_path);
            std::filesystem::create_directories(dir);
            const std::size_t table_len = static_cast<std::size_t>(std::max(report_m_max, 24));

            write_file(dir / "coeffs_b.json", coeff_json(coeffs::b_table(table_len), 30).dump(2) + "\n");
            write_file(dir / "coeffs_d.json", coeff_json(coeffs::d_table(table_len), 30).dump(2) + "\n");

            std::ostringstream integrals;
            const auto irows = integral_checks(prec, 20);
            print_table(integrals, irows);
            write_file(dir / "integrals.txt", integrals.str());

            std::ostringstream identities;
            std::vector<Rational> xs;
            for (const char* s : {"1/4", "1", "2", "100"}) xs.push_back(Rational::parse(s));
            const auto drows = identity_checks(prec, {2, 3, 8, 10}, xs);
            print_table(identities, drows);
            write_file(dir / "identities.txt", identities.str());

            const auto certs = run_certify(1, report_m_max);
            write_file(dir / "certificates.json", certs.certificates.dump(2) + "\n");

            std::ostringstream grid;
            VerifyOptions grid_opt;
            grid_opt.points = report_points;
            const bool grid_ok = run_verify(grid, grid_opt);
            write_file(dir / "verify.csv", grid.str());

            write_file(dir / "discrepancies.txt", disc_text);

            const bool ok = all_pass(irows) && all_pass(drows) && certs.ok && grid_ok && disc.b4_resolved &&
                            disc.delta4_positive;
            std::ostringstream summary;
            summary << "integrals: " << (all_pass(irows) ? "PASS" : "FAIL") << "\n"
                    << "identities: " << (all_pass(drows) ? "PASS" : "FAIL") << "\n"
                    << "certificates m=1.." << report_m_max << ": " << (certs.ok ? "PASS" : "FAIL") << "\n"
                    << "grid sweep: " << (grid_ok ? "PASS" : "FAIL") << "\n"
                    << "discrepancy report: b_4 resolved=" << (disc.b4_resolved ? "yes" : "no")
                    << ", Delta_4 positive=" << (disc.delta4_positive ? "yes" : "no") << "\n"
                    << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
            write_file(dir / "summary.txt", summary.str());
            out << summary.str();
            return ok ? kOk : kCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace carleman::cli
