#include "veronese/veronese.hpp"

#include <algorithm>

#include "veronese/compositions.hpp"
#include "veronese/eulerian.hpp"

namespace veronese {

Polynomial veronese_numerator(const Polynomial& h, int d, int r) {
    if (r < 1) throw std::invalid_argument("veronese_numerator: order r must be >= 1");
    if (d < 0) throw std::invalid_argument("veronese_numerator: d must be nonnegative");
    if (h.is_zero()) return {};
    const int s = *h.degree();
    const int m = std::max(s, d);
    const auto row = count_row(r - 1, d);
    const long kmax = static_cast<long>(r - 1) * d;
    std::vector<Rational> out(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Rational acc = 0;
        for (int j = 0; j <= s; ++j) {
            const long k = static_cast<long>(i) * r - j;
            if (k >= 0 && k <= kmax) acc += Rational(row[static_cast<size_t>(k)]) * h.coeff(j);
        }
        out[static_cast<size_t>(i)] = std::move(acc);
    }
    return Polynomial(std::move(out));
}

RationalSeries veronese_series(const RationalSeries& f, int r) {
    return RationalSeries(veronese_numerator(f.numerator(), f.denom_power(), r), f.denom_power());
}

VeroneseResult veronese_apply(const RationalSeries& f, int r) {
    return VeroneseResult{f, r, veronese_numerator(f.numerator(), f.denom_power(), r),
                          f.denom_power()};
}

CutDegreeResult cut_degree(const RationalSeries& f) {
    const int d = f.denom_power();
    if (d == 0) throw DimensionZero("cut_degree: series has denominator power 0");
    const Polynomial& h = f.numerator();
    const int s = h.is_zero() ? 0 : *h.degree();
    const int threshold = std::max(1, s - d + 1);
    if (s <= d) return CutDegreeResult{Polynomial{}, f, threshold};
    auto [p, h1] = Polynomial::divmod(h, one_minus_t_power(d));
    Polynomial reduced_numerator = Polynomial::constant(p(0)) * one_minus_t_power(d) + h1;
    return CutDegreeResult{std::move(p), RationalSeries(std::move(reduced_numerator), d), threshold};
}

IntMatrix transform_matrix(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("transform_matrix: d and r must be >= 1");
    const auto row = count_row(r - 1, d);
    const long kmax = static_cast<long>(r - 1) * d;
    IntMatrix m(d + 1, d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            const long k = static_cast<long>(i) * r - j;
            if (k >= 0 && k <= kmax) m.at(i, j) = row[static_cast<size_t>(k)];
        }
    return m;
}

bool verify_factorization(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("verify_factorization: d and r must be >= 1");
    const IntMatrix c = transform_matrix(d, r);
    const IntMatrix l = l_matrix(d);
    std::vector<Integer> diag(static_cast<size_t>(d) + 1);
    diag[0] = 1;
    for (int i = 1; i <= d; ++i) diag[static_cast<size_t>(i)] = int_pow(Integer(r), static_cast<unsigned long>(i - 1));
    return c * l == l * IntMatrix::diagonal(diag);
}

bool check_euler_identity(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("check_euler_identity: d and r must be >= 1");
    const auto row = count_row(r - 1, d + 1);
    const long kmax = static_cast<long>(r - 1) * (d + 1);
    const EulerianTable table(d);
    const Integer rd = int_pow(Integer(r), static_cast<unsigned long>(d));
    for (int i = 0; i <= d; ++i) {
        Integer lhs = 0;
        for (int j = 0; j <= d; ++j) {
            const long k = static_cast<long>(i) * r - j;
            if (k >= 0 && k <= kmax) lhs += row[static_cast<size_t>(k)] * table.number(d, j);
        }
        if (lhs != rd * table.number(d, i)) return false;
        if (i == 1 && lhs != rd) return false;  // the specialization: A(d,1) = 1
    }
    return true;
}

}  // namespace veronese
