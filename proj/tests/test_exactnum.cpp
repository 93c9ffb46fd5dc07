#include "doctest.h"

#include "carleman/certify.hpp"
#include "carleman/polynomial.hpp"
#include "carleman/rational.hpp"

#include <random>
#include <set>
#include <stdexcept>

using carleman::exact::RatPoly;
using carleman::exact::Rational;

namespace {

Rational random_rational(std::mt19937& rng, long lo = -20, long hi = 20, long den_max = 12) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, den_max);
    return Rational(num(rng), den(rng));
}

RatPoly random_poly(std::mt19937& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) v = random_rational(rng);
    return RatPoly(c);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("1e-3") == Rational(1, 1000));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS((void)Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse(""), std::invalid_argument);

    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(1, 24).to_decimal(6) == "0.041667");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(Rational(1, 2).to_decimal(3) == "0.500");
    CHECK(Rational(-1, 1000).to_decimal(2) == "0.00");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS((void)Rational(0).reciprocal());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(carleman::exact::binomial(10, 3) == 120);
}

TEST_CASE("poly_add examples") {
    const RatPoly t{0, 1};
    const RatPoly t2 = RatPoly::monomial(1, 2);
    CHECK(poly_add(t2, -t2).is_zero());
    CHECK(poly_add(t2, -t2).degree() == -1);
    CHECK(poly_add(RatPoly{Rational(1, 12), 1}, t) == RatPoly{Rational(1, 12), 2});
}

TEST_CASE("poly_mul examples") {
    const RatPoly p{Rational(1, 12), 1};
    CHECK(poly_mul(p, p) == RatPoly{Rational(1, 144), Rational(1, 6), 1});
    CHECK(p.pow(4) == RatPoly{Rational(1, 20736), Rational(1, 432), Rational(1, 24), Rational(1, 3), 1});
    CHECK(poly_mul(p, RatPoly{}).is_zero());
}

TEST_CASE("poly_shift examples") {
    CHECK(poly_shift(RatPoly::monomial(1, 2), Rational(1, 12)) == RatPoly{Rational(1, 144), Rational(1, 6), 1});
    const RatPoly cubic{-1, 0, 0, 1};
    CHECK(poly_shift(cubic, 0) == cubic);
    CHECK(poly_shift(RatPoly{0, 1}, Rational(11, 12)) == RatPoly{Rational(11, 12), 1});
}

TEST_CASE("division and derivative") {
    const RatPoly p{2, -3, 1};
    const auto [q, r] = divmod(p, RatPoly{-1, 1});
    CHECK(q == RatPoly{-2, 1});
    CHECK(r.is_zero());
    CHECK(p.derivative() == RatPoly{-3, 2});
    CHECK(RatPoly{0, 0, 3, 6}.strip_t_power() == RatPoly{3, 6});
    CHECK(RatPoly{0, 0, 3, 6}.trailing_degree() == 2);
    CHECK(RatPoly{Rational(1, 2), Rational(-3, 4)}.primitive_part() == RatPoly{2, -3});
    CHECK(RatPoly{1, 2, 3}.to_strings() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("sturm examples") {
    CHECK(carleman::exact::sturm_positive_root_count(RatPoly{2, -3, 1}) == 2);
    CHECK(carleman::exact::sturm_positive_root_count(RatPoly{1, 0, 1}) == 0);
    CHECK(carleman::exact::sturm_positive_root_count(RatPoly{-5}) == 0);
    const auto n4 = carleman::certify::build_numerator(4);
    CHECK(carleman::exact::sturm_positive_root_count(n4.taylor_shift(Rational(11, 12))) == 0);
    CHECK_THROWS_WITH_AS((void)carleman::exact::sturm_positive_root_count(RatPoly{}), "indeterminate root count",
                         std::domain_error);
    // (t - 1)^2 (t - 3): distinct roots only
    const std::vector<Rational> roots{1, 1, 3};
    CHECK(carleman::exact::sturm_positive_root_count(RatPoly::from_roots(roots)) == 2);
    CHECK(carleman::exact::sturm_root_count(RatPoly::from_roots(roots), 1, 3) == 1);
    CHECK(carleman::exact::sturm_root_count(RatPoly::from_roots(roots), 0, 1) == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240601);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p + q) + r == p + (q + r));
        CHECK(p - p == RatPoly{});
    }
}

TEST_CASE("shift composition and evaluation") {
    std::mt19937 rng(77);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_poly(rng, 6);
        const auto a = random_rational(rng), b = random_rational(rng);
        CHECK(poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b));
        const auto u = random_rational(rng, -100, 100, 50);
        CHECK(poly_shift(p, a)(u) == p(u + a));
    }
}

TEST_CASE("sturm count agrees with a grid scan") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> sevenths(1, 700), integers(1, 100), outside(101, 300), negative(-50, -1);
    std::uniform_int_distribution<int> count(0, 3);

    for (int trial = 0; trial < 40; ++trial) {
        // Simple roots at j/7 off the integers, repeated roots at integers,
        // so every root is either on the grid or isolated between grid points.
        std::vector<Rational> roots;
        std::set<std::pair<long, long>> used;
        auto add_unique = [&](long num, long den, int multiplicity) {
            if (roots.size() + multiplicity > 6 || !used.insert({num, den}).second) return;
            for (int i = 0; i < multiplicity; ++i) roots.emplace_back(num, den);
        };
        for (int i = count(rng); i > 0; --i) {
            long j = sevenths(rng);
            if (j % 7 == 0) ++j;
            add_unique(j, 7, 1);
        }
        for (int i = count(rng); i > 0; --i) add_unique(integers(rng), 1, 1 + (i % 2));
        if (count(rng) > 1) add_unique(outside(rng), 1, 1);
        if (count(rng) > 1) add_unique(negative(rng), 1, 1);
        if (roots.empty()) roots.emplace_back(5, 7);
        const RatPoly p = RatPoly::from_roots(roots) * Rational(trial % 2 ? -3 : 2, 5);

        // zeros on the grid, plus sign flips between neighbouring nonzero samples
        int scan = 0;
        int prev_sign = 0;
        bool zero_since = false;
        for (long k = 1; k <= 10000; ++k) {
            const int s = p(Rational(k, 100)).sign();
            if (s == 0) {
                ++scan;
                zero_since = true;
                continue;
            }
            if (prev_sign != 0 && s != prev_sign && !zero_since) ++scan;
            prev_sign = s;
            zero_since = false;
        }
        CHECK(carleman::exact::sturm_root_count(p, 0, 100) == scan);

        std::set<std::pair<long, long>> positive;
        for (const auto& [num, den] : used)
            if (num > 0) positive.insert({num, den});
        CHECK(carleman::exact::sturm_positive_root_count(p) == static_cast<int>(positive.size()));
    }
}
