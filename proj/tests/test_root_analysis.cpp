#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "veronese/root_analysis.hpp"
#include "veronese/sturm.hpp"
#include "veronese/veronese.hpp"

using namespace veronese;

namespace {

const Polynomial kSimplexQuartic = Polynomial::from_ints({1, 16, 31, 26, 6});

std::vector<Rational> rationals(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

/// prod (1 - beta_i t) expanded in double precision.
std::vector<std::complex<double>> reconstruct(const std::vector<std::complex<double>>& betas) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& b : betas) {
        std::vector<std::complex<double>> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= b * c[i];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

TEST_CASE("sturm_real_roots examples") {
    CHECK(sturm_real_roots(Polynomial::from_ints({1, 2, 1})) == 1);
    CHECK(sturm_real_roots(kSimplexQuartic) == 2);
    CHECK(sturm_real_roots(Polynomial::from_ints({1, 0, 1})) == 0);
    CHECK_THROWS_AS(sturm_real_roots(Polynomial{}), ZeroPolynomial);
}

TEST_CASE("sturm interval counting") {
    // roots of t^2 - 1 at -1 and 1
    const Polynomial p = Polynomial::from_ints({-1, 0, 1});
    CHECK(sturm_real_roots(p, Rational(-2), Rational(0)) == 1);
    CHECK(sturm_real_roots(p, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_real_roots(p, Rational(0), Rational(1, 2)) == 0);
    CHECK_THROWS_AS(sturm_real_roots(p, Rational(-1), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_real_roots(p, Rational(2), Rational(0)), std::invalid_argument);
}

TEST_CASE("square-free decomposition and multiplicity") {
    // (1+t)^2 (1-2t)
    const Polynomial p =
        Polynomial::from_ints({1, 1}) * Polynomial::from_ints({1, 1}) * Polynomial::from_ints({1, -2});
    const auto factors = square_free_decomposition(p);
    CHECK(factors.size() == 2);
    CHECK(real_root_multiplicity(p) == 3);
    CHECK(real_root_multiplicity(Polynomial::from_ints({1, 2, 1})) == 2);
    CHECK(negative_real_root_multiplicity(Polynomial::from_ints({1, 2, 1})) == 2);
    CHECK(negative_real_root_multiplicity(Polynomial::from_ints({0, 0, 1})) == 0);
}

TEST_CASE("is_real_rooted examples") {
    CHECK_FALSE(is_real_rooted(kSimplexQuartic));
    CHECK(is_real_rooted(Polynomial::from_ints({1, 3})));
    const Polynomial far = veronese_numerator(Polynomial::from_ints({1, 1, 1, 1, 1}), 5, 100);
    CHECK(is_real_rooted(far));  // large enough order: all zeros real
}

TEST_CASE("numeric_roots examples") {
    const auto single = numeric_roots(Polynomial::from_ints({1, 3}));
    REQUIRE(single.size() == 1);
    CHECK(std::abs(single[0] - std::complex<double>(-1.0 / 3.0, 0)) < 1e-12);

    const auto pair = numeric_roots(Polynomial::from_ints({1, 0, -1}));
    REQUIRE(pair.size() == 2);
    CHECK(std::abs(pair[0] - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(pair[1] - std::complex<double>(1, 0)) < 1e-12);

    const auto quartic = numeric_roots(kSimplexQuartic);
    REQUIRE(quartic.size() == 4);
    int real = 0, complex_count = 0;
    std::complex<double> product = 1.0;
    for (const auto& z : quartic) {
        (std::abs(z.imag()) < 1e-6 ? real : complex_count) += 1;
        product *= z;
    }
    CHECK(real == 2);
    CHECK(complex_count == 2);
    CHECK(std::abs(product - std::complex<double>(1.0 / 6.0, 0)) < 1e-9);  // Vieta: h_0/h_4

    // double root converges too
    const auto dbl = numeric_roots(Polynomial::from_ints({1, 2, 1}));
    REQUIRE(dbl.size() == 2);
    CHECK(std::abs(dbl[0] - std::complex<double>(-1, 0)) < 1e-5);
}

TEST_CASE("numeric_roots input validation") {
    CHECK_THROWS_AS(numeric_roots(Polynomial::from_ints({7})), std::invalid_argument);
    CHECK_THROWS_AS(numeric_roots(Polynomial::from_ints({1, 1}), -1.0), std::invalid_argument);
}

TEST_CASE("beta_profile of (1+t)/(1-t)^2") {
    const RationalSeries f(Polynomial::from_ints({1, 1}), 2);
    const RootProfile prof = beta_profile(f, 5);
    CHECK(prof.numerator == Polynomial::from_ints({1, 9}));
    REQUIRE(prof.betas.size() == 2);
    CHECK(std::abs(prof.betas[0] - std::complex<double>(-9, 0)) < 1e-10);
    CHECK(prof.betas[1] == std::complex<double>(0, 0));  // padding beta is exact
    CHECK(prof.beta(1).real() == doctest::Approx(-9));   // d-1 = 1: the minimum
    CHECK(prof.beta(2).real() == 0);
    CHECK(prof.all_real);
    CHECK(prof.real_count == 1);
    CHECK(prof.negative_count == 1);
    CHECK(prof.classes[0] == BetaClass::RealNegative);
    CHECK(prof.classes[1] == BetaClass::RealNonnegative);
}

TEST_CASE("beta_profile with constant numerator") {
    // a_n = n+1 subsampled by r gives (1 + (r-1)t)/(1-t)^2, so the numerator
    // stays constant only at r = 1
    const RationalSeries f(Polynomial::from_ints({1}), 2);
    const RootProfile identity = beta_profile(f, 1);
    CHECK(identity.betas == std::vector<std::complex<double>>{{0, 0}, {0, 0}});
    CHECK(identity.all_real);
    CHECK(identity.real_count == 0);

    const RootProfile prof = beta_profile(f, 3);
    CHECK(prof.numerator == Polynomial::from_ints({1, 2}));
    REQUIRE(prof.betas.size() == 2);
    CHECK(std::abs(prof.betas[0] - std::complex<double>(-2, 0)) < 1e-12);
    CHECK(prof.betas[1] == std::complex<double>(0, 0));
    CHECK(prof.all_real);
    CHECK(prof.real_count == 1);
}

TEST_CASE("beta_profile of the d=5 simplex series at r=2 certifies two real roots") {
    const RationalSeries f(Polynomial::from_ints({1, 1, 1, 1, 1}), 5);
    const RootProfile prof = beta_profile(f, 2);
    CHECK(prof.numerator == kSimplexQuartic);
    CHECK(prof.real_count == 2);
    CHECK_FALSE(prof.all_real);
    CHECK(prof.padded_degree == 5);
    int complex_betas = 0;
    for (auto c : prof.classes) complex_betas += c == BetaClass::Complex ? 1 : 0;
    CHECK(complex_betas == 2);
}

TEST_CASE("beta_profile preconditions") {
    CHECK_THROWS_AS(beta_profile(RationalSeries(Polynomial::from_ints({1, 5}), 0), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(beta_profile(RationalSeries(Polynomial::from_ints({0, 1}), 2), 2),
                    std::invalid_argument);
}

TEST_CASE("sweep of (1+t)/(1-t)^2 matches the closed form") {
    const RationalSeries f(Polynomial::from_ints({1, 1}), 2);
    std::vector<int> orders(20);
    for (int k = 0; k < 20; ++k) orders[static_cast<size_t>(k)] = k + 1;
    const SweepReport report = sweep(f, orders);
    CHECK(report.middle_cauchy.empty());  // d = 2: no middle betas exist
    CHECK(report.min_beta_delta.size() == 19);
    CHECK(report.target_gap.size() == 20);
    CHECK(report.threshold == 1);
    CHECK(report.nonnegative_tail);
    for (int k = 0; k < 20; ++k) {
        const auto& p = report.profiles[static_cast<size_t>(k)];
        const int r = orders[static_cast<size_t>(k)];
        CHECK(p.numerator == Polynomial::from_ints({1, 2L * r - 1}));
        CHECK(p.beta(1).real() == doctest::Approx(-(2.0 * r - 1)).epsilon(1e-10));
        CHECK(p.beta(2).real() == 0);
        CHECK(*report.target_gap[static_cast<size_t>(k)] == 0);
    }
    for (const auto& delta : report.min_beta_delta) CHECK(*delta == doctest::Approx(-2.0));
}

TEST_CASE("sweep of the simplex-boundary series reports the observed threshold") {
    // h = (1,1,1,1,1) over (1-t)^4: two real roots at r = 2, all real from r = 3
    const RationalSeries f(Polynomial::from_ints({1, 1, 1, 1, 1}), 4);
    std::vector<int> orders;
    for (int r = 2; r <= 60; ++r) orders.push_back(r);
    const SweepReport report = sweep(f, orders);
    CHECK(report.profiles.front().real_count == 2);
    CHECK_FALSE(report.profiles.front().all_real);
    REQUIRE(report.threshold.has_value());
    CHECK(*report.threshold == 3);
    for (const auto& p : report.profiles)
        if (p.order >= *report.threshold) {
            CHECK(p.all_real);
            CHECK(p.real_count == 4);
            CHECK(p.negative_count >= p.padded_degree - 1);
        }
    // middle betas drift toward their limits: Cauchy diagnostic shrinks
    REQUIRE(report.middle_cauchy.size() == orders.size() - 1);
    CHECK(*report.middle_cauchy.back() < *report.middle_cauchy[5]);
}

TEST_CASE("sweep records the hypothesis flag") {
    // negative tail: a_n = -(2n+1) eventually negative
    const RationalSeries f(Polynomial::from_ints({-1, -1}), 2);
    const SweepReport report = sweep(f, {1, 2, 3});
    CHECK_FALSE(report.nonnegative_tail);
    CHECK(report.profiles.size() == 3);
}

TEST_CASE("sweep input validation") {
    const RationalSeries f(Polynomial::from_ints({1, 1}), 2);
    CHECK_THROWS_AS(sweep(f, {3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(f, {0, 1}), std::invalid_argument);
}

TEST_CASE("unimodality and log-concavity") {
    CHECK(is_unimodal(rationals({1, 16, 31, 26, 6})));
    CHECK(is_log_concave(rationals({1, 16, 31, 26, 6})));
    CHECK_FALSE(is_unimodal(rationals({1, 0, 1})));
    CHECK(is_unimodal(rationals({1, 1, 1, 1, 1})));
    CHECK(is_log_concave(rationals({1, 1, 1, 1, 1})));
    CHECK(is_unimodal({}));
    CHECK(is_log_concave({}));
    CHECK(is_unimodal(rationals({3})));
    CHECK_FALSE(is_log_concave(rationals({1, 1, 3})));
}

TEST_CASE("real-rooted positive implies log-concave implies unimodal") {
    const RationalSeries f(Polynomial::from_ints({1, 1, 1, 1, 1}), 5);
    for (int r = 3; r <= 30; r += 3) {
        const Polynomial h = veronese_numerator(f.numerator(), 5, r);
        if (!is_real_rooted(h)) continue;
        bool positive = true;
        for (const auto& c : h.coeffs()) positive = positive && c > 0;
        if (!positive) continue;
        CHECK(is_log_concave(h.coeffs()));
        CHECK(is_unimodal(h.coeffs()));
    }
}

TEST_CASE("certified and numeric real counts agree on transformed numerators") {
    const Polynomial base = Polynomial::from_ints({1, 1, 1, 1, 1});
    for (int r = 1; r <= 20; ++r) {
        const Polynomial h = veronese_numerator(base, 5, r);
        const auto roots = numeric_roots(h, 1e-12);
        int numeric_real = 0;
        for (const auto& z : roots)
            if (std::abs(z.imag()) < std::sqrt(1e-12)) ++numeric_real;
        CHECK(numeric_real == real_root_multiplicity(h));
    }
}

TEST_CASE("reconstruction: the beta product recovers the normalized numerator") {
    for (int d = 2; d <= 8; ++d) {
        std::vector<Rational> c(static_cast<size_t>(d), 1);
        c.push_back(Rational(d));  // some degree-d numerator with varied entries
        const RationalSeries f(Polynomial(std::move(c)), d);
        const RootProfile prof = beta_profile(f, 7);
        const auto recon = reconstruct(prof.betas);
        const Polynomial& h = prof.numerator;
        const double h0 = to_double(h.coeff(0));
        REQUIRE(recon.size() == static_cast<size_t>(prof.padded_degree) + 1);
        for (size_t i = 0; i < recon.size(); ++i) {
            const double expected = to_double(h.coeff(static_cast<int>(i))) / h0;
            const double scale = std::max(1.0, std::abs(expected));
            CHECK(std::abs(recon[i].real() - expected) / scale < 1e-8);
            CHECK(std::abs(recon[i].imag()) / scale < 1e-8);
        }
    }
}
