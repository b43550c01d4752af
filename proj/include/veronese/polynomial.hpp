#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

/// Dense univariate polynomial over Rational, coefficient i belongs to t^i.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector and degree() == nullopt.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(Rational c);
    /// Convenience for integer coefficient lists (tests, fixtures).
    static Polynomial from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^i; zero beyond the stored range.
    Rational coeff(int i) const;
    Rational leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const = default;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;

    /// Exact long division; divisor must be nonzero.
    /// Returns {quotient, remainder} with deg remainder < deg divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend,
                                                    const Polynomial& divisor);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// (1 - t)^k expanded.
Polynomial one_minus_t_power(int k);

/// t^degree * p(1/t); requires deg p <= degree. The roots of the result are
/// the reciprocals of the roots of p, together with 0 taken degree - deg p
/// times.
Polynomial reversed(const Polynomial& p, int degree);

Polynomial poly_pow(const Polynomial& p, unsigned exponent);

}  // namespace veronese
