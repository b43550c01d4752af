#include "veronese/rational_series.hpp"

namespace veronese {

RationalSeries::RationalSeries(Polynomial numerator, int denom_power)
    : numerator_(std::move(numerator)), denom_power_(denom_power) {
    if (denom_power_ < 0) throw std::invalid_argument("denom_power must be nonnegative");
    if (numerator_.is_zero()) {
        denom_power_ = 0;
        return;
    }
    static const Polynomial one_minus_t = one_minus_t_power(1);
    while (denom_power_ > 0 && numerator_(1) == 0) {
        auto [quot, rem] = Polynomial::divmod(numerator_, one_minus_t);
        numerator_ = std::move(quot);
        --denom_power_;
    }
}

std::vector<Rational> RationalSeries::expand(int count) const {
    if (count < 1) throw std::invalid_argument("expand: count must be positive");
    const int d = denom_power_;
    std::vector<Integer> binoms(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) binoms[static_cast<size_t>(k)] = binomial(d, k);
    std::vector<Rational> a(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) {
        Rational v = numerator_.coeff(n);
        for (int k = 1; k <= d && k <= n; ++k) {
            Rational term = Rational(binoms[static_cast<size_t>(k)]) * a[static_cast<size_t>(n - k)];
            if (k % 2 == 1)
                v += term;
            else
                v -= term;
        }
        a[static_cast<size_t>(n)] = v;
    }
    return a;
}

Polynomial fit_numerator(const std::vector<Rational>& coefficients, int d) {
    if (d < 0) throw std::invalid_argument("fit_numerator: d must be nonnegative");
    const size_t n = coefficients.size();
    if (n == 0 || n <= static_cast<size_t>(d))
        throw NonPolynomialTail("fit_numerator: coefficient prefix shorter than d+1");
    const Polynomial factor = one_minus_t_power(d);
    // Truncated product (sum a_n t^n) * (1-t)^d; index k is exact for k < n.
    std::vector<Rational> prod(n);
    for (size_t k = 0; k < n; ++k) {
        Rational v = 0;
        for (int j = 0; j <= d && static_cast<size_t>(j) <= k; ++j)
            v += factor.coeff(j) * coefficients[k - static_cast<size_t>(j)];
        prod[k] = v;
    }
    for (size_t k = n - static_cast<size_t>(d); k < n; ++k)
        if (prod[k] != 0)
            throw NonPolynomialTail("fit_numerator: nonzero tail at index " + std::to_string(k));
    prod.resize(n - static_cast<size_t>(d));
    return Polynomial(std::move(prod));
}

}  // namespace veronese
