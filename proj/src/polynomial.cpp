#include "carleman/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace carleman::exact {

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RatPoly RatPoly::constant(const Rational& value) { return RatPoly({value}); }

RatPoly RatPoly::monomial(const Rational& coefficient, int degree) {
    if (degree < 0) throw std::domain_error("negative monomial degree");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coefficient;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::from_roots(std::span<const Rational> roots) {
    RatPoly result = constant(1);
    for (const auto& r : roots) result = result * RatPoly({-r, Rational(1)});
    return result;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Rational& RatPoly::trailing() const {
    if (is_zero()) throw std::domain_error("trailing coefficient of the zero polynomial");
    return coeffs_[static_cast<std::size_t>(trailing_degree())];
}

int RatPoly::trailing_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    }
    return 0;
}

Rational RatPoly::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::taylor_shift(const Rational& shift) const {
    // Horner in place: after pass i the tail holds the Taylor coefficients.
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    if (shift.is_zero() || n <= 1) return *this;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::strip_t_power() const {
    if (is_zero()) return {};
    const auto j = static_cast<std::ptrdiff_t>(trailing_degree());
    return RatPoly(std::vector<Rational>(coeffs_.begin() + j, coeffs_.end()));
}

RatPoly RatPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : coeffs_) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    const Rational scale{mpq_class(den_lcm, num_gcd)};
    return *this * scale;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& p) { return p * Rational(-1); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    RatPoly remainder = dividend;
    const int dd = divisor.degree();
    if (remainder.degree() < dd) return {RatPoly{}, remainder};
    std::vector<Rational> quotient(static_cast<std::size_t>(remainder.degree() - dd) + 1);
    const Rational& lead = divisor.leading();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const int shift = remainder.degree() - dd;
        const Rational factor = remainder.leading() / lead;
        quotient[static_cast<std::size_t>(shift)] = factor;
        auto& r = remainder.coeffs_;
        for (int k = 0; k <= dd; ++k) {
            r[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
        }
        // The leading term cancels exactly; trim drops it (and any further zeros).
        remainder.trim();
    }
    return {RatPoly(std::move(quotient)), remainder};
}

RatPoly RatPoly::pow(int exponent) const {
    if (exponent < 0) throw std::domain_error("negative polynomial power");
    RatPoly result = constant(1);
    RatPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::vector<std::string> RatPoly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.abs();
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("indeterminate root count");
    std::vector<RatPoly> chain{p.primitive_part()};
    RatPoly next = p.derivative().primitive_part();
    while (!next.is_zero()) {
        chain.push_back(next);
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        next = (-divmod(a, b).second).primitive_part();
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Variations just right of x. Reading signs at x+ rather than at x keeps the
// count right when x is a multiple root and the whole chain vanishes there.
int variations_right_of(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.taylor_shift(x).trailing().sign());
    return sign_variations(signs);
}

}  // namespace

int sturm_positive_root_count(const RatPoly& p) {
    const auto chain = sturm_chain(p);
    std::vector<int> at_zero_plus;
    std::vector<int> at_infinity;
    for (const auto& q : chain) {
        // Near 0+ the lowest nonzero term dominates; at +inf the leading term.
        at_zero_plus.push_back(q.trailing().sign());
        at_infinity.push_back(q.leading().sign());
    }
    return sign_variations(at_zero_plus) - sign_variations(at_infinity);
}

int sturm_root_count(const RatPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::domain_error("sturm_root_count needs a < b");
    const auto chain = sturm_chain(p);
    return variations_right_of(chain, a) - variations_right_of(chain, b);
}

}  // namespace carleman::exact
