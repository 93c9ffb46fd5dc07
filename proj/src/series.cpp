#include "carleman/series.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace carleman::series {

namespace {

void require_domain(int m, const Rational& x) {
    if (m < 1) throw std::domain_error("series: m must be >= 1");
    if (x.sign() <= 0) throw std::domain_error("series: x must be > 0");
}

void require_table(const coeffs::CoeffTable& table, int m) {
    if (table.size() < static_cast<std::size_t>(m)) {
        throw std::domain_error("coefficient table shorter than m = " + std::to_string(m));
    }
}

// sum_{k=1}^{m} c_k y^k by Horner.
Rational power_sum(const coeffs::CoeffTable& c, int m, const Rational& y) {
    Rational acc(0);
    for (int k = m; k >= 1; --k) {
        acc += c.at(static_cast<std::size_t>(k));
        acc *= y;
    }
    return acc;
}

double power_sum_float(const coeffs::CoeffTable& c, int m, double y) {
    double acc = 0.0;
    for (int k = m; k >= 1; --k) {
        acc += c.at(static_cast<std::size_t>(k)).to_double();
        acc *= y;
    }
    return acc;
}

}  // namespace

const Rational& eleven_twelfths() {
    static const Rational value(11, 12);
    return value;
}

Rational eval_sigma(const coeffs::CoeffTable& b, int m, const Rational& x) {
    require_domain(m, x);
    require_table(b, m);
    return power_sum(b, m, (Rational(1) + x).reciprocal());
}

Rational eval_S(const coeffs::CoeffTable& d, int m, const Rational& x) {
    require_domain(m, x);
    require_table(d, m);
    return power_sum(d, m, (x + eleven_twelfths()).reciprocal());
}

Rational eval_sigma(int m, const Rational& x) {
    require_domain(m, x);
    return eval_sigma(coeffs::shared_store().get(coeffs::Kind::B, static_cast<std::size_t>(m)), m, x);
}

Rational eval_S(int m, const Rational& x) {
    require_domain(m, x);
    return eval_S(coeffs::shared_store().get(coeffs::Kind::D, static_cast<std::size_t>(m)), m, x);
}

Rational delta(int m, const Rational& x) { return eval_S(m, x) - eval_sigma(m, x); }

SeriesPoint eval_point(int m, const Rational& x) {
    SeriesPoint p{m, x, eval_sigma(m, x), eval_S(m, x), {}};
    p.delta = p.S - p.sigma;
    return p;
}

double eval_sigma_float(int m, double x) {
    if (m < 1 || !(x > 0.0)) throw std::domain_error("series: need m >= 1 and x > 0");
    return power_sum_float(coeffs::shared_store().get(coeffs::Kind::B, static_cast<std::size_t>(m)), m,
                           1.0 / (1.0 + x));
}

double eval_S_float(int m, double x) {
    if (m < 1 || !(x > 0.0)) throw std::domain_error("series: need m >= 1 and x > 0");
    return power_sum_float(coeffs::shared_store().get(coeffs::Kind::D, static_cast<std::size_t>(m)), m,
                           1.0 / (x + 11.0 / 12.0));
}

Rational delta1_closed_form(const Rational& x) {
    require_domain(1, x);
    return Rational(1, 24) / ((x + eleven_twelfths()) * (x + Rational(1)));
}

Rational delta2_closed_form(const Rational& x) {
    require_domain(2, x);
    return (Rational(288) * (Rational(1) + x).pow(2) * (x + eleven_twelfths())).reciprocal();
}

Rational odd_prefix(int m, const Rational& x) {
    require_domain(m, x);
    if (m % 2 == 0) throw std::domain_error("odd_prefix: m must be odd");
    Rational value = (x + eleven_twelfths()).reciprocal() - (x + Rational(1)).reciprocal();
    const Rational base = (Rational(12) * x + Rational(11)).reciprocal();
    Rational power = base;  // base^k
    for (int k = 2; k <= m; ++k) {
        power *= base;
        const Rational term = Rational(12) * power;
        value += (k % 2 == 0) ? -term : term;
    }
    return value;
}

TailComparison tail_compare(int m, const Rational& x, int K) {
    require_domain(m, x);
    if (K <= m) throw std::domain_error("tail_compare: K must exceed m");
    auto& store = coeffs::shared_store();
    const auto b = store.get(coeffs::Kind::B, static_cast<std::size_t>(K));
    const auto d = store.get(coeffs::Kind::D, static_cast<std::size_t>(K));
    TailComparison out{eval_sigma(b, K, x) - eval_sigma(b, m, x), eval_S(d, K, x) - eval_S(d, m, x), 0};
    for (int k = m + 1; k <= K; ++k) {
        if (d.at(static_cast<std::size_t>(k)).sign() < 0) ++out.negative_d_terms;
    }
    return out;
}

bool cross_bound_check(const Rational& t, const Rational& x) {
    if (t.sign() <= 0 || t > Rational(1)) throw std::domain_error("cross_bound_check: t must lie in (0, 1]");
    if (x.sign() <= 0) throw std::domain_error("cross_bound_check: x must be > 0");
    return t / (Rational(1) + x) > (t - Rational(1, 12)) / (x + eleven_twelfths());
}

std::vector<Rational> log_grid(const Rational& x_min, const Rational& x_max, int points) {
    if (x_min.sign() <= 0 || !(x_min < x_max)) throw std::domain_error("log_grid: need 0 < x_min < x_max");
    if (points < 2) throw std::domain_error("log_grid: need at least 2 points");
    const double lo = std::log10(x_min.to_double());
    const double hi = std::log10(x_max.to_double());
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(points));
    grid.push_back(x_min);
    for (int i = 1; i + 1 < points; ++i) {
        const double v = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.11e", v);
        grid.push_back(Rational::parse(buf));
    }
    grid.push_back(x_max);
    return grid;
}

}  // namespace carleman::series
