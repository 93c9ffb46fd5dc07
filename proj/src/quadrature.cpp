#include "carleman/quadrature.hpp"

#include "carleman/series.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace carleman::quad {

namespace {

std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex mutex;
    return mutex;
}

// Abscissa data for one tanh-sinh level on the reference interval (-1, 1):
// weight, and the fractions of the interval length to the left and right end.
struct RefNode {
    Real weight;
    Real left_fraction;
    Real right_fraction;
};

struct NodeTable {
    Real t_max;
    std::vector<std::vector<RefNode>> levels;
};

RefNode make_ref_node(const Real& t, const Real& half_pi) {
    const Real u = half_pi * sinh(t);
    const Real cu = cosh(u);
    const Real weight = half_pi * cosh(t) / (cu * cu);
    const Real e2u = exp(2 * u);
    return {weight, e2u / (1 + e2u), 1 / (1 + e2u)};
}

// Nodes beyond t_max carry weights below 10^-(digits + 10); every integrand
// here is bounded, so they are dropped.
Real find_t_max(const Real& half_pi, unsigned digits) {
    const Real threshold = pow(Real(10), -static_cast<int>(digits) - 10);
    Real t = 1;
    while (make_ref_node(t, half_pi).weight > threshold) t += Real(1) / 8;
    return t;
}

const std::vector<RefNode>& level_nodes(NodeTable& table, int level, const Real& half_pi) {
    while (static_cast<int>(table.levels.size()) <= level) {
        const int l = static_cast<int>(table.levels.size());
        std::vector<RefNode> nodes;
        const Real h = ldexp(Real(1), -l);
        const long k_max = static_cast<long>(floor(table.t_max / h).convert_to<double>());
        // Level 0 takes every integer k; finer levels only the odd k.
        const long step = l == 0 ? 1 : 2;
        for (long k = l == 0 ? -k_max : -(k_max % 2 == 0 ? k_max - 1 : k_max); k <= k_max; k += step) {
            nodes.push_back(make_ref_node(h * k, half_pi));
        }
        table.levels.push_back(std::move(nodes));
    }
    return table.levels[static_cast<std::size_t>(level)];
}

NodeTable& node_table() {
    // Keyed by working digits; guarded by the precision mutex.
    static std::map<unsigned, NodeTable> tables;
    const unsigned digits = Real::default_precision();
    auto it = tables.find(digits);
    if (it == tables.end()) {
        const Real half_pi = pi_real() / 2;
        it = tables.emplace(digits, NodeTable{find_t_max(half_pi, digits), {}}).first;
    }
    return it->second;
}

struct Piece {
    Real lo;
    Real hi;
    Real off_a;  // lo - a
    Real off_b;  // b - hi
};

QuadResult integrate_piece(const Integrand& f, const Piece& piece, const Real& abs_tol, const QuadOptions& options) {
    NodeTable& table = node_table();
    const Real half_pi = pi_real() / 2;
    const Real width = piece.hi - piece.lo;
    const Real half = width / 2;

    QuadResult result;
    result.subintervals_used = 1;
    Real weighted_sum = 0;
    Real previous = 0;
    for (int level = 0; level <= options.max_level; ++level) {
        for (const RefNode& rn : level_nodes(table, level, half_pi)) {
            const Real dl = width * rn.left_fraction;
            const Real dr = width * rn.right_fraction;
            Node node{dl <= dr ? Real(piece.lo + dl) : Real(piece.hi - dr), piece.off_a + dl, piece.off_b + dr};
            const Real fx = f(node);
            if (!boost::multiprecision::isfinite(fx)) {
                throw std::range_error("integrand produced a non-finite value at x = " + format_real(node.x));
            }
            weighted_sum += rn.weight * fx;
            ++result.evaluations;
        }
        const Real estimate = half * ldexp(weighted_sum, -level);
        result.levels = level;
        result.value = estimate;
        if (level > 0) {
            result.abs_error_estimate = abs(estimate - previous);
            if (level >= options.min_level && result.abs_error_estimate <= abs_tol) {
                result.converged = true;
                return result;
            }
        }
        previous = estimate;
    }
    return result;
}

QuadResult integrate_adaptive(const Integrand& f, const Piece& piece, const Real& abs_tol, const QuadOptions& options,
                              int& budget) {
    QuadResult whole = integrate_piece(f, piece, abs_tol, options);
    if (whole.converged || budget < 2) return whole;
    budget -= 1;  // this piece becomes two
    const Real mid = (piece.lo + piece.hi) / 2;
    const Piece left{piece.lo, mid, piece.off_a, piece.off_b + (piece.hi - mid)};
    const Piece right{mid, piece.hi, piece.off_a + (mid - piece.lo), piece.off_b};
    const Real half_tol = abs_tol / 2;
    QuadResult l = integrate_adaptive(f, left, half_tol, options, budget);
    QuadResult r = integrate_adaptive(f, right, half_tol, options, budget);
    QuadResult out;
    out.value = l.value + r.value;
    out.abs_error_estimate = l.abs_error_estimate + r.abs_error_estimate;
    out.subintervals_used = l.subintervals_used + r.subintervals_used;
    out.levels = std::max(l.levels, r.levels);
    out.evaluations = whole.evaluations + l.evaluations + r.evaluations;
    out.converged = l.converged && r.converged && out.abs_error_estimate <= abs_tol;
    return out;
}

QuadResult combine(const QuadResult& a, const QuadResult& b) {
    QuadResult out;
    out.value = a.value + b.value;
    out.abs_error_estimate = a.abs_error_estimate + b.abs_error_estimate;
    out.subintervals_used = a.subintervals_used + b.subintervals_used;
    out.levels = std::max(a.levels, b.levels);
    out.evaluations = a.evaluations + b.evaluations;
    out.converged = a.converged && b.converged;
    return out;
}

// Splits a node of [0, 1] into (s, 1 - s) without cancellation.
struct Unit {
    Real s;
    Real sc;
};

Unit unit_of(const Node& n) { return {n.from_a, n.from_b}; }

QuadResult integrate_unit(const Integrand& f, const Precision& prec) {
    return integrate(f, Real(0), Real(1), Real(prec.target_abs_tol));
}

void require_positive(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("x must be > 0");
}

void require_m(int m) {
    if (m < 2) throw std::domain_error("decomposition checks need m >= 2");
}

}  // namespace

void Precision::validate() const {
    if (!(target_abs_tol > 0.0) || !std::isfinite(target_abs_tol)) {
        throw std::invalid_argument("target_abs_tol must be a positive finite number");
    }
    if (working_digits < 25) throw std::invalid_argument("working_digits must be >= 25");
    const int needed = 3 + static_cast<int>(std::ceil(-std::log10(target_abs_tol)));
    if (working_digits < needed) {
        throw std::invalid_argument("working_digits " + std::to_string(working_digits) +
                                    " too small for tolerance; need >= " + std::to_string(needed));
    }
}

PrecisionScope::PrecisionScope(const Precision& precision)
    : lock_(precision_mutex()), previous_digits_(Real::default_precision()) {
    precision.validate();
    Real::default_precision(static_cast<unsigned>(precision.working_digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_digits_); }

QuadResult integrate(const Integrand& f, const Real& a, const Real& b, const Real& abs_tol, const QuadOptions& options) {
    if (!(a < b)) throw std::domain_error("integrate: need a < b");
    int budget = options.max_subintervals;
    return integrate_adaptive(f, Piece{a, b, Real(0), Real(0)}, abs_tol, options, budget);
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pi_real() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real e_real() { return exp(Real(1)); }

Real g_kernel(const Real& s, const Real& sc) {
    if (s < 0 || sc < 0) throw std::domain_error("g: argument outside [0, 1]");
    if (s == 0 || sc == 0) return Real(0);
    const Real pi = pi_real();
    return exp(s * log(s) + sc * log(sc)) * sin(pi * (s < sc ? s : sc)) / pi;
}

Real g_over_s(const Real& s, const Real& sc) {
    if (s < 0 || sc < 0) throw std::domain_error("g: argument outside [0, 1]");
    if (s == 0) return Real(1);
    if (sc == 0) return Real(0);
    const Real pi = pi_real();
    return exp(s * log(s) + sc * log(sc)) * sin(pi * (s < sc ? s : sc)) / (pi * s);
}

Real g_eval(const Real& s) {
    if (s < 0 || s > 1) throw std::domain_error("g_eval: s must lie in [0, 1]");
    return g_kernel(s, 1 - s);
}

QuadResult moment(int k, const Precision& prec) {
    if (k < 2) throw std::domain_error("moment: k must be >= 2");
    PrecisionScope scope(prec);
    return integrate_unit(
        [k](const Node& n) {
            const auto [s, sc] = unit_of(n);
            return g_kernel(s, sc) * pow(s, k - 2);
        },
        prec);
}

QuadResult mirrored_moment(int k, const Precision& prec) {
    if (k < 2) throw std::domain_error("mirrored_moment: k must be >= 2");
    PrecisionScope scope(prec);
    return integrate_unit(
        [k](const Node& n) {
            const auto [s, sc] = unit_of(n);
            return g_kernel(s, sc) * pow(sc, k - 2);
        },
        prec);
}

QuadResult reciprocal_moment(const Precision& prec) {
    PrecisionScope scope(prec);
    return integrate_unit(
        [](const Node& n) {
            const auto [s, sc] = unit_of(n);
            return g_over_s(s, sc);
        },
        prec);
}

QuadResult mirrored_reciprocal_moment(const Precision& prec) {
    PrecisionScope scope(prec);
    return integrate_unit(
        [](const Node& n) {
            const auto [s, sc] = unit_of(n);
            // g(s)/(1-s), with the same continuous extension at s = 1
            if (sc == 0) return Real(1);
            return g_kernel(s, sc) / sc;
        },
        prec);
}

QuadResult d_numeric(int n, const Precision& prec) {
    if (n < 2 || n > 12) throw std::domain_error("d_numeric supports 2 <= n <= 12; use the exact table beyond");
    PrecisionScope scope(prec);
    const int p = n - 1;
    const Real split = Real(1) / 12;
    const Real tol(prec.target_abs_tol);
    // [0, 1/12]: t = from_a, 12t - 1 = -12 from_b
    const QuadResult below = integrate(
        [p](const Node& nd) {
            const Real t = nd.from_a;
            return pow(-12 * nd.from_b, p) * g_over_s(t, 1 - t);
        },
        Real(0), split, tol / 2);
    // [1/12, 1]: 12t - 1 = 12 from_a, 1 - t = from_b
    const QuadResult above = integrate(
        [p](const Node& nd) { return pow(12 * nd.from_a, p) * g_over_s(nd.x, nd.from_b); }, split, Real(1),
        tol / 2);
    QuadResult integral = combine(below, above);
    const Real scale = pow(Real(12), p) * e_real();
    const Real sign = (p % 2 == 0) ? Real(1) : Real(-1);
    integral.value = (sign + integral.value) / scale;
    integral.abs_error_estimate /= scale;
    return integral;
}

IdentityCheck h_identity_check(const Rational& x, const Precision& prec) {
    require_positive(x);
    PrecisionScope scope(prec);
    const Real xr = to_real(x);
    const Real e = e_real();
    IdentityCheck out;
    out.lhs = (1 + xr) * (e - exp(xr * log1p(1 / xr)));
    out.quad = integrate_unit(
        [&xr](const Node& n) {
            const auto [s, sc] = unit_of(n);
            return g_kernel(s, sc) / (xr + s);
        },
        prec);
    out.rhs = e / 2 + out.quad.value;
    out.abs_diff = abs(out.lhs - out.rhs);
    return out;
}

IdentityCheck sigma_decomposition_check(int m, const Rational& x, const Precision& prec) {
    require_m(m);
    require_positive(x);
    const Rational sigma = series::eval_sigma(m, x);
    PrecisionScope scope(prec);
    const Real xr = to_real(x);
    const Real one_plus_x = to_real(Rational(1) + x);
    const Real e = e_real();
    IdentityCheck out;
    out.lhs = e * to_real(sigma);
    out.quad = integrate_unit(
        [&](const Node& n) {
            const auto [s, sc] = unit_of(n);
            const Real gap = xr + sc;  // 1 + x - s
            return g_kernel(s, sc) / (one_plus_x * gap) - g_over_s(s, sc) * pow(s / one_plus_x, m) / gap;
        },
        prec);
    out.rhs = e / (2 * one_plus_x) + out.quad.value;
    out.abs_diff = abs(out.lhs - out.rhs);
    return out;
}

namespace {

// sum_{k=2}^{m} (-1)^{k-1} 12 / (12x + 11)^k, exactly.
Rational alternating_tail(int m, const Rational& x) {
    const Rational base = (Rational(12) * x + Rational(11)).reciprocal();
    Rational power = base;
    Rational sum(0);
    for (int k = 2; k <= m; ++k) {
        power *= base;
        sum += (k % 2 == 0) ? -(Rational(12) * power) : Rational(12) * power;
    }
    return sum;
}

}  // namespace

IdentityCheck S_decomposition_check(int m, const Rational& x, const Precision& prec) {
    require_m(m);
    require_positive(x);
    const Rational S = series::eval_S(m, x);
    const Rational tail = alternating_tail(m, x);
    PrecisionScope scope(prec);
    const Real xr = to_real(x);
    const Real center = to_real(x + series::eleven_twelfths());
    const Real twelfth = Real(1) / 12;
    const Real e = e_real();
    IdentityCheck out;
    out.lhs = e * to_real(S);
    out.quad = integrate_unit(
        [&](const Node& n) {
            const auto [t, tc] = unit_of(n);
            const Real shifted = t - twelfth;
            const Real r = shifted / center;
            return g_over_s(t, tc) * shifted / ((xr + tc) * center) * (1 - pow(r, m - 1));
        },
        prec);
    out.rhs = e / (2 * center) + out.quad.value + to_real(tail);
    out.abs_diff = abs(out.lhs - out.rhs);
    return out;
}

IdentityCheck difference_decomposition_check(int m, const Rational& x, const Precision& prec) {
    require_m(m);
    require_positive(x);
    const Rational diff = series::delta(m, x);
    const Rational tail = alternating_tail(m, x);
    const Rational prefix = Rational(1, 2) * ((x + series::eleven_twelfths()).reciprocal() -
                                              (x + Rational(1)).reciprocal());
    PrecisionScope scope(prec);
    const Real xr = to_real(x);
    const Real center = to_real(x + series::eleven_twelfths());
    const Real one_plus_x = to_real(Rational(1) + x);
    const Real twelfth = Real(1) / 12;
    const Real e = e_real();
    IdentityCheck out;
    out.lhs = e * to_real(diff);
    out.quad = integrate_unit(
        [&](const Node& n) {
            const auto [t, tc] = unit_of(n);
            const Real gap = xr + tc;
            const Real shifted = t - twelfth;
            const Real g = g_kernel(t, tc);
            const Real gs = g_over_s(t, tc);
            const Real powers = pow(Real(t / one_plus_x), m) - pow(Real(shifted / center), m);
            Real value = gs * shifted / (gap * center);
            value -= g / (gap * one_plus_x);
            value += gs * powers / gap;
            return value;
        },
        prec);
    out.rhs = e * to_real(prefix) + out.quad.value + to_real(tail);
    out.abs_diff = abs(out.lhs - out.rhs);
    return out;
}

std::string format_real(const Real& value, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::scientific << value;
    return os.str();
}

}  // namespace carleman::quad
