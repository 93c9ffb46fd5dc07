#include "carleman/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace carleman::exact {

namespace {

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    std::string text(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(text, 10);
}

// Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_part = s.substr(epos + 1);
        std::string_view exp_digits = exp_part;
        if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+')) {
            exp_digits.remove_prefix(1);
        }
        if (!all_digits(exp_digits) || exp_digits.size() > 6) {
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        }
        exponent = std::stol(std::string(exp_part));
        s = s.substr(0, epos);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        digits = std::string(s);
    }
    if (digits.empty()) digits = "0";
    mpq_class value{mpz_class(digits, 10)};
    if (exponent >= 0) {
        value *= pow10(static_cast<unsigned long>(exponent));
    } else {
        value /= pow10(static_cast<unsigned long>(-exponent));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (den_text.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        mpz_class den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(num, den));
    }
    return parse_decimal(text);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of a reduced fraction stay reduced.
    mpq_class result;
    result.get_num() = num;
    result.get_den() = den;
    return Rational(result);
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) throw std::domain_error("negative digit count");
    const mpz_class scale = pow10(static_cast<unsigned long>(digits));
    mpz_class num = ::abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class scaled = (2 * num + den) / (2 * den);
    std::string body = scaled.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && scaled != 0) body.insert(0, "-");
    return body;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace carleman::exact
