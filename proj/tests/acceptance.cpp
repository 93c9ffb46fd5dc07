// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "carleman/certify.hpp"
#include "carleman/coeffs.hpp"
#include "carleman/discrepancy.hpp"
#include "carleman/harness.hpp"
#include "carleman/polynomial.hpp"
#include "carleman/quadrature.hpp"
#include "carleman/series.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using carleman::exact::RatPoly;
using carleman::exact::Rational;
using carleman::quad::Real;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_ms;  // 0 means no time limit
    std::function<Outcome()> body;
    std::function<Outcome()> followup = {};  // runs after the timed body, outside the limit
};

double as_double(const Real& v) { return static_cast<double>(v); }

Outcome exact_coefficients() {
    Outcome o;
    const auto b = carleman::coeffs::b_table(3);
    const auto d = carleman::coeffs::d_table(4);
    o.require(b.values == std::vector<Rational>{Rational(1, 2), Rational(1, 24), Rational(1, 48)}, "b prefix");
    o.require(d.values == std::vector<Rational>{Rational(1, 2), 0, Rational(5, 288), Rational(139, 17280)},
              "d prefix");
    return o;
}

Outcome b4_discrepancy() {
    Outcome o;
    auto b = carleman::coeffs::b_table(4).values;
    const Rational printed = carleman::certify::PrintedValues::b4();
    const Rational d4(139, 17280);
    o.require(b[3] == Rational(73, 5760), "recursion b_4 = " + b[3].to_string());
    o.require(b[3] != printed, "printed b_4 not flagged");
    o.require(carleman::coeffs::d_from_b(b, 4) == d4, "recursion b_4 does not reproduce d_4");
    b[3] = printed;
    o.require(carleman::coeffs::d_from_b(b, 4) != d4, "printed b_4 reproduces d_4");
    return o;
}

Outcome b4_report() {
    Outcome o;
    const auto report = carleman::report::discrepancy_report();
    o.require(report.b4_resolved, "report does not resolve b_4");
    const auto& row = report.rows.front();
    o.require(row.item == "b_4" && !row.agrees && row.printed == "73/5670", "b_4 row not flagged");
    return o;
}

Outcome m2_closed_form() {
    Outcome o;
    const auto cert = carleman::certify::certify_positivity(2);
    o.require(cert.reduced == RatPoly{Rational(1, 288)}, "reduced numerator " + cert.reduced.to_string());
    o.require(cert.numerator == RatPoly{0, Rational(1, 288)}, "full numerator " + cert.numerator.to_string());
    o.require(cert.t_power_removed == 1, "t power removed");
    std::mt19937 rng(2);
    std::uniform_int_distribution<long> num(1, 10000), den(1, 100);
    for (int i = 0; i < 100; ++i) {
        const Rational x(num(rng), den(rng));
        if (carleman::series::delta(2, x) != Rational(1, 288) / ((1 + x).pow(2) * (x + Rational(11, 12)))) {
            o.require(false, "closed form fails at x = " + x.to_string());
            break;
        }
    }
    return o;
}

Outcome m4_replication() {
    Outcome o;
    const auto report = carleman::certify::verify_step3_tables();
    o.require(report.all_expansions_match, "an expansion line differs");
    const auto n4 = carleman::certify::build_numerator(4);
    for (const auto& row : report.consolidation) {
        if (row.degree >= 5) {
            o.require(row.exact_with_recursion_b4 == 0 && row.printed_matches,
                      "degree " + std::to_string(row.degree) + " does not vanish");
        } else if (row.degree == 4) {
            o.require(row.exact_with_recursion_b4 == 0, "degree 4 does not vanish");
            o.require(row.printed == Rational(89, 60480) && !row.printed_matches, "printed 89/60480 not flagged");
        }
    }
    o.require(n4.degree() == 3, "degree of N_4");
    o.require(n4.coeff(3) == Rational(79, 23040), "t^3 coefficient");
    o.require(n4.coeff(0) == Rational(139, 358318080), "constant term");
    for (int k = 0; k <= 3; ++k) o.require(n4.coeff(k).sign() > 0, "coefficient " + std::to_string(k));
    return o;
}

Outcome certificates() {
    Outcome o;
    using carleman::certify::Method;
    int sturm = 0;
    for (int m = 1; m <= 24; ++m) {
        const auto cert = carleman::certify::certify_positivity(m);
        const bool method_ok = cert.method == Method::AllCoeffsNonneg || cert.method == Method::SturmNoRoots;
        o.require(cert.certified && method_ok, "m = " + std::to_string(m));
        if (cert.method == Method::SturmNoRoots) ++sturm;
    }
    if (o.pass) o.detail = "24/24 certified, " + std::to_string(sturm) + " via Sturm";
    return o;
}

Outcome quadrature_moments() {
    Outcome o;
    const auto b = carleman::coeffs::b_table(20);
    carleman::quad::PrecisionScope scope({});
    const Real e = carleman::quad::e_real();
    const auto m2 = carleman::quad::moment(2);
    const auto m3 = carleman::quad::moment(3);
    const auto rec = carleman::quad::reciprocal_moment();
    o.require(m2.converged && as_double(abs(m2.value - e / 24)) <= 1e-10, "integral of g");
    o.require(m3.converged && as_double(abs(m3.value - e / 48)) <= 1e-10, "integral of g s");
    o.require(rec.converged && as_double(abs(rec.value - (e / 2 - 1))) <= 1e-10, "integral of g/s");
    double worst = 0;
    for (int k = 2; k <= 20; ++k) {
        const auto mk = carleman::quad::moment(k);
        const double diff = as_double(abs(mk.value / e - carleman::quad::to_real(b.at(k))));
        worst = std::max(worst, diff);
        o.require(mk.converged && diff <= 1e-10, "moment " + std::to_string(k));
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst |moment/e - b_k| = %.1e", worst);
        o.detail = buf;
    }
    return o;
}

Outcome d_cross_check() {
    Outcome o;
    const auto d = carleman::coeffs::d_table(12);
    carleman::quad::PrecisionScope scope({});
    const auto two = carleman::quad::d_numeric(2);
    o.require(two.converged && as_double(abs(two.value)) <= 1e-10, "d_2");
    double worst = 0;
    for (int n = 3; n <= 12; ++n) {
        const auto r = carleman::quad::d_numeric(n);
        const Real exact = carleman::quad::to_real(d.at(n));
        const double rel = as_double(abs(r.value - exact) / abs(exact));
        worst = std::max(worst, rel);
        o.require(r.converged && rel <= 1e-8, "d_" + std::to_string(n));
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative error %.1e", worst);
        o.detail = buf;
    }
    return o;
}

Outcome h_identity() {
    Outcome o;
    for (const char* xs : {"1/10", "1", "10"}) {
        const auto check = carleman::quad::h_identity_check(Rational::parse(xs));
        o.require(check.quad.converged && as_double(check.abs_diff) <= 1e-10, std::string("x = ") + xs);
    }
    return o;
}

Outcome decompositions() {
    Outcome o;
    for (int m : {2, 3, 8, 10}) {
        for (const char* xs : {"1/4", "1", "2", "100"}) {
            const Rational x = Rational::parse(xs);
            const auto s = carleman::quad::sigma_decomposition_check(m, x);
            const auto S = carleman::quad::S_decomposition_check(m, x);
            const std::string at = "(" + std::to_string(m) + ", " + xs + ")";
            o.require(s.quad.converged && as_double(s.abs_diff) <= 1e-9, "sigma " + at);
            o.require(S.quad.converged && as_double(S.abs_diff) <= 1e-9, "S " + at);
        }
    }
    return o;
}

Outcome grid_positivity() {
    Outcome o;
    const auto grid = carleman::series::log_grid(Rational(1, 1000), 1000, 200);
    o.require(grid.size() == 200 && grid.front() == Rational(1, 1000) && grid.back() == Rational(1000), "grid");
    int checked = 0;
    for (int m = 1; m <= 20; ++m) {
        for (const auto& x : grid) {
            if (carleman::series::delta(m, x).sign() <= 0) o.require(false, "delta(" + std::to_string(m) + ", x)");
            if (m % 2 == 1 && carleman::series::odd_prefix(m, x).sign() <= 0)
                o.require(false, "odd_prefix(" + std::to_string(m) + ", x)");
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " exact points";
    return o;
}

Outcome carleman_harness() {
    Outcome o;
    using carleman::harness::SequenceSpec;
    const std::vector<std::pair<SequenceSpec, std::string>> cases{
        {SequenceSpec::power(2.0, 10000), "1/n^2"}, {SequenceSpec::geometric(0.5, 100), "2^-n"}};
    for (const auto& [seq, name] : cases) {
        for (int m : {1, 4}) {
            const auto rows = carleman::harness::inequality_report(seq, m, {seq.terms});
            for (const auto& row : rows) {
                const std::string at = name + ", m = " + std::to_string(m);
                o.require(row.lhs_below_one && row.lhs_below_eleven_twelfths, "lhs >= rhs for " + at);
                o.require(row.ordered, "rhs(11/12) > rhs(1) for " + at);
            }
        }
    }
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937 rng(12);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    std::uniform_int_distribution<int> deg(0, 5);
    auto rational = [&] { return Rational(num(rng), den(rng)); };
    auto poly = [&] {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& v : c) v = rational();
        return RatPoly(c);
    };

    bool ring = true, shift = true;
    for (int i = 0; i < 200; ++i) {
        const auto p = poly(), q = poly(), r = poly();
        ring = ring && (p + q) * r == p * r + q * r;
        const Rational a = rational(), b = rational(), u = rational();
        shift = shift && p.taylor_shift(a).taylor_shift(b) == p.taylor_shift(a + b);
        shift = shift && p.taylor_shift(a)(u) == p(u + a);
    }
    o.require(ring, "ring axioms");
    o.require(shift, "shift composition");

    bool sturm = true;
    std::uniform_int_distribution<long> sevenths(1, 699), nroots(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<long> picks;
        const long count = nroots(rng);
        while (static_cast<long>(picks.size()) < count) {
            const long j = sevenths(rng);
            if (j % 7 != 0) picks.insert(j);
        }
        std::vector<Rational> roots;
        for (long j : picks) roots.emplace_back(j, 7);
        const RatPoly p = RatPoly::from_roots(roots);
        int flips = 0, prev = 0;
        for (long k = 1; k <= 10000; ++k) {
            const int s = p(Rational(k, 100)).sign();
            if (prev != 0 && s != 0 && s != prev) ++flips;
            if (s != 0) prev = s;
        }
        sturm = sturm && carleman::exact::sturm_root_count(p, 0, 100) == flips &&
                flips == static_cast<int>(picks.size());
    }
    o.require(sturm, "Sturm vs grid scan");

    carleman::quad::PrecisionScope scope({});
    bool symmetric = true;
    std::uniform_int_distribution<long> milli(0, 1000000);
    for (int i = 0; i < 1000; ++i) {
        const Real s = carleman::quad::to_real(Rational(milli(rng), 1000000));
        symmetric = symmetric && as_double(abs(carleman::quad::g_eval(s) - carleman::quad::g_eval(1 - s))) < 1e-30;
    }
    o.require(symmetric, "g symmetry");

    bool decreasing = true;
    Real previous = carleman::quad::moment(2).value;
    for (int k = 3; k <= 20; ++k) {
        const Real next = carleman::quad::moment(k).value;
        decreasing = decreasing && next < previous;
        previous = next;
    }
    o.require(decreasing, "moment monotonicity");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "exact coefficient prefixes", 1, exact_coefficients},
        {"AC2", "b_4 discrepancy detected through d_4", 1, b4_discrepancy, b4_report},
        {"AC3", "m = 2 closed form", 0, m2_closed_form},
        {"AC4", "m = 4 expansion and consolidation replay", 10, m4_replication},
        {"AC5", "certificates for m = 1..24", 30000, certificates},
        {"AC6", "quadrature moment identities", 60000, quadrature_moments},
        {"AC7", "d_n by quadrature, n = 2..12", 0, d_cross_check},
        {"AC8", "h identity at x = 0.1, 1, 10", 0, h_identity},
        {"AC9", "sigma and S decompositions", 0, decompositions},
        {"AC10", "exact grid positivity, m = 1..20, 200 points", 60000, grid_positivity},
        {"AC11", "Carleman harness, both centers", 0, carleman_harness},
        {"AC12", "property suites", 0, property_suites},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = c.body();
        } catch (const std::exception& ex) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + ex.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.followup && outcome.pass) {
            try {
                outcome = c.followup();
            } catch (const std::exception& ex) {
                outcome.pass = false;
                outcome.detail = std::string("exception: ") + ex.what();
            }
        }
        const bool in_time = c.limit_ms <= 0 || ms < c.limit_ms;
        const bool pass = outcome.pass && in_time;
        if (!pass) ++failed;

        char timing[96];
        if (c.limit_ms > 0) {
            std::snprintf(timing, sizeof timing, "%.3f ms, limit %g ms", ms, c.limit_ms);
        } else {
            std::snprintf(timing, sizeof timing, "%.3f ms", ms);
        }
        std::string detail = outcome.detail;
        if (!in_time) detail += detail.empty() ? "over time limit" : "; over time limit";
        std::printf("[%s] %-5s %s (%s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, timing,
                    detail.empty() ? "" : " : ", detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
