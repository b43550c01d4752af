#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "veronese/rational_series.hpp"

using namespace veronese;

namespace {

RationalSeries series(std::vector<long> h, int d) {
    return RationalSeries(Polynomial::from_ints(h), d);
}

std::vector<Rational> rationals(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Polynomial random_poly(std::mt19937& rng, int max_degree, bool rational_coeffs) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = Rational(num(rng));
        if (rational_coeffs) x /= Rational(den(rng));
    }
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("26/2") == Rational(13));
    CHECK(parse_rational(" -3/6 ") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("5/-10") == Rational(-1, 2));  // sign moves to the numerator
    CHECK(parse_rational("4/6").get_den() == 3);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial canonical form and degree sentinel") {
    CHECK(Polynomial{}.is_zero());
    CHECK(!Polynomial{}.degree().has_value());
    CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(Polynomial::from_ints({0, 0}).is_zero());
}

TEST_CASE("poly_add / poly_mul / poly_eval examples") {
    const Polynomial one_minus_t = Polynomial::from_ints({1, -1});
    const Polynomial one_plus_t = Polynomial::from_ints({1, 1});
    CHECK(one_minus_t * one_plus_t == Polynomial::from_ints({1, 0, -1}));
    CHECK(Polynomial::from_ints({1, 1, 1, 1, 1})(Rational(1)) == Rational(5));
    CHECK(one_minus_t_power(2) * one_plus_t == Polynomial::from_ints({1, -1, -1, 1}));
    CHECK((one_plus_t + one_minus_t) == Polynomial::from_ints({2}));
    CHECK((one_plus_t - one_plus_t).is_zero());
}

TEST_CASE("polynomial division") {
    const Polynomial h = Polynomial::from_ints({1, 0, 0, 2});
    auto [q, r] = Polynomial::divmod(h, Polynomial::from_ints({1, -1}));
    CHECK(q * Polynomial::from_ints({1, -1}) + r == h);
    CHECK(*r.degree() == 0);
}

TEST_CASE("expand examples") {
    CHECK(series({1}, 1).expand(4) == rationals({1, 1, 1, 1}));
    CHECK(series({1, 1, 1, 1, 1}, 5).expand(3) == rationals({1, 6, 21}));
    CHECK(series({1, 1}, 2).expand(4) == rationals({1, 3, 5, 7}));
    CHECK_THROWS_AS(series({1}, 1).expand(0), std::invalid_argument);
}

TEST_CASE("fit_numerator examples") {
    CHECK(fit_numerator(rationals({1, 1, 1, 1, 1, 1}), 1) == Polynomial::from_ints({1}));
    CHECK(fit_numerator(rationals({1, 3, 5, 7, 9, 11}), 2) == Polynomial::from_ints({1, 1}));
    const Polynomial paper = Polynomial::from_ints({1, 16, 31, 26, 6});
    CHECK(fit_numerator(RationalSeries(paper, 5).expand(12), 5) == paper);
}

TEST_CASE("fit_numerator rejects non-polynomial tails") {
    // powers of 2 are not of the form h(t)/(1-t)
    CHECK_THROWS_AS(fit_numerator(rationals({1, 2, 4, 8, 16, 32}), 1), NonPolynomialTail);
    CHECK_THROWS_AS(fit_numerator(rationals({1, 2}), 3), NonPolynomialTail);
}

TEST_CASE("round trip: fit after expand recovers the numerator") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dpow(0, 6);
    for (int iter = 0; iter < 80; ++iter) {
        const Polynomial h = random_poly(rng, 8, true);
        const int d = dpow(rng);
        const int s = h.is_zero() ? 0 : *h.degree();
        const auto coeffs = RationalSeries(h, d).expand(s + d + 4);
        CHECK(fit_numerator(coeffs, d) == h);
    }
}

TEST_CASE("expand is linear") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dpow(0, 5);
    for (int iter = 0; iter < 40; ++iter) {
        const Polynomial f = random_poly(rng, 6, true);
        const Polynomial g = random_poly(rng, 6, true);
        const int d = dpow(rng);
        const auto a = RationalSeries(f, d).expand(12);
        const auto b = RationalSeries(g, d).expand(12);
        const auto sum = RationalSeries(f + g, d).expand(12);
        for (int n = 0; n < 12; ++n) CHECK(sum[n] == a[n] + b[n]);
    }
}

TEST_CASE("series canonicalization strips common (1-t) factors") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        const Polynomial h = random_poly(rng, 6, false);
        const int d = iter % 5;
        const RationalSeries direct(h, d);
        const RationalSeries inflated(h * one_minus_t_power(1), d + 1);
        CHECK(direct == inflated);
    }
    // canonical invariant: numerator not divisible by (1-t) unless d = 0
    const RationalSeries f(Polynomial::from_ints({1, -1}), 2);
    CHECK(f.denom_power() == 1);
    CHECK(f.numerator() == Polynomial::from_ints({1}));
    const RationalSeries zero(Polynomial{}, 4);
    CHECK(zero.denom_power() == 0);
}
