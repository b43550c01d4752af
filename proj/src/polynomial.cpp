#include "veronese/polynomial.hpp"

#include <stdexcept>

namespace veronese {

Polynomial Polynomial::constant(Rational c) {
    std::vector<Rational> v;
    if (c != 0) v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational y = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) y = y * x + coeffs_[i];
    return y;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend,
                                                     const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = dividend.coeffs_;
    const auto& div = divisor.coeffs_;
    const size_t dd = div.size() - 1;
    if (rem.size() <= dd) return {Polynomial{}, dividend};
    std::vector<Rational> quot(rem.size() - dd);
    for (size_t shift = quot.size(); shift-- > 0;) {
        Rational q = rem[shift + dd] / div[dd];
        quot[shift] = q;
        if (q != 0)
            for (size_t j = 0; j <= dd; ++j) rem[shift + j] -= q * div[j];
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial one_minus_t_power(int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        v[static_cast<size_t>(j)] = Rational(binomial(k, j));
        if (j % 2 == 1) v[static_cast<size_t>(j)] = -v[static_cast<size_t>(j)];
    }
    return Polynomial(std::move(v));
}

Polynomial reversed(const Polynomial& p, int degree) {
    if (!p.is_zero() && *p.degree() > degree)
        throw std::invalid_argument("reversed: polynomial degree exceeds the target degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) v[static_cast<size_t>(degree - i)] = p.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial poly_pow(const Polynomial& p, unsigned exponent) {
    Polynomial out = Polynomial::constant(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * p;
    return out;
}

}  // namespace veronese
