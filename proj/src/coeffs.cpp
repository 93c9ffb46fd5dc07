#include "carleman/coeffs.hpp"

#include <stdexcept>

namespace carleman::coeffs {

std::string_view to_string(Kind kind) { return kind == Kind::B ? "b" : "d"; }

std::string_view to_string(Derivation derivation) {
    return derivation == Derivation::Recursion ? "recursion" : "binomial_transform";
}

const Rational& CoeffTable::at(std::size_t k) const {
    if (k < 1 || k > values.size()) {
        throw std::domain_error("coefficient index " + std::to_string(k) + " outside 1.." +
                                std::to_string(values.size()));
    }
    return values[k - 1];
}

namespace {

void extend_b(std::vector<Rational>& b, std::size_t count) {
    if (b.empty() && count >= 1) b.emplace_back(1, 2);
    while (b.size() < count) {
        const long n = static_cast<long>(b.size());  // computing b_{n+1}
        Rational sum(0);
        for (long k = 1; k <= n; ++k) sum += b[static_cast<std::size_t>(k - 1)] / Rational(n + 2 - k);
        b.push_back((Rational(1, n + 2) - sum) / Rational(n + 1));
    }
}

void extend_d(std::vector<Rational>& d, std::span<const Rational> b, std::size_t count) {
    while (d.size() < count) d.push_back(d_from_b(b, d.size() + 1));
}

}  // namespace

Rational d_from_b(std::span<const Rational> b, std::size_t n) {
    if (n < 1) throw std::domain_error("d index must be >= 1");
    if (n == 1) return Rational(1, 2);
    if (b.size() < n) throw std::domain_error("d_from_b needs b_1..b_" + std::to_string(n));
    const unsigned long p = n - 1;
    const Rational twelve(12);
    Rational sum((p % 2 == 0) ? Rational(1, 2) : Rational(-1, 2));
    for (unsigned long j = 1; j <= p; ++j) {
        Rational term = Rational(exact::binomial(p, j)) * twelve.pow(static_cast<int>(j)) * b[j];
        if ((p - j) % 2 == 1) term = -term;
        sum += term;
    }
    return sum / twelve.pow(static_cast<int>(p));
}

CoeffTable b_table(std::size_t count) {
    if (count < 1) throw std::domain_error("b_table: count must be >= 1");
    CoeffTable table{Kind::B, Derivation::Recursion, {}};
    extend_b(table.values, count);
    return table;
}

CoeffTable d_table(std::size_t count) {
    if (count < 1) throw std::domain_error("d_table: count must be >= 1");
    const CoeffTable b = b_table(count);
    CoeffTable table{Kind::D, Derivation::BinomialTransform, {}};
    extend_d(table.values, b.values, count);
    return table;
}

std::string coeff_decimal(const CoeffTable& table, std::size_t k, int digits) {
    if (digits < 1) throw std::domain_error("coeff_decimal: digits must be >= 1");
    return table.at(k).to_decimal(digits);
}

RationalInterval e_bounds(int terms) {
    if (terms < 2) throw std::domain_error("e_bounds needs at least 2 terms");
    // sum_{k=0}^{n} 1/k! < e < sum + 1/(n! n)
    Rational sum(0);
    Rational term(1);
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) term /= Rational(k);
        sum += term;
    }
    return {sum, sum + term / Rational(terms)};
}

RationalInterval one_minus_inv_e_bounds(int terms) {
    const auto e = e_bounds(terms);
    return {Rational(1) - e.lo.reciprocal(), Rational(1) - e.hi.reciprocal()};
}

CoeffTable CoeffStore::get(Kind kind, std::size_t count) {
    if (count < 1) throw std::domain_error("coefficient count must be >= 1");
    std::lock_guard lock(mutex_);
    extend_b(b_.values, count);
    CoeffTable& target = kind == Kind::B ? b_ : d_;
    if (kind == Kind::D) extend_d(d_.values, b_.values, count);
    CoeffTable out{target.kind, target.derivation, {}};
    out.values.assign(target.values.begin(), target.values.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

CoeffStore& shared_store() {
    static CoeffStore store;
    return store;
}

}  // namespace carleman::coeffs
