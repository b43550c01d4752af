#pragma once

#include <stdexcept>
#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

/// Thrown by fit_numerator when the truncated product with (1-t)^d has
/// nonzero trailing coefficients, i.e. the coefficient prefix is too short or
/// the sequence is not of the form h(t)/(1-t)^d.
struct NonPolynomialTail : std::domain_error {
    using std::domain_error::domain_error;
};

/// A rational series h(t)/(1-t)^d held in canonical form: the numerator is
/// not divisible by (1-t) unless d = 0, and a zero numerator forces d = 0.
class RationalSeries {
public:
    RationalSeries() = default;
    RationalSeries(Polynomial numerator, int denom_power);

    const Polynomial& numerator() const { return numerator_; }
    int denom_power() const { return denom_power_; }
    bool operator==(const RationalSeries& o) const = default;

    /// First `count` Taylor coefficients a_0 .. a_{count-1}, exactly, via the
    /// recurrence a_n = h_n + sum_{k=1..d} (-1)^{k+1} binom(d,k) a_{n-k}.
    std::vector<Rational> expand(int count) const;

private:
    Polynomial numerator_;
    int denom_power_ = 0;
};

/// Recovers h(t) with sum a_n t^n = h(t)/(1-t)^d from a coefficient prefix.
/// The prefix must be long enough that the product with (1-t)^d vanishes from
/// index size()-d on; otherwise NonPolynomialTail is thrown.
Polynomial fit_numerator(const std::vector<Rational>& coefficients, int d);

}  // namespace veronese
