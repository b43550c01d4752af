#include "veronese/eulerian.hpp"

#include <stdexcept>

namespace veronese {

namespace {

std::vector<Integer> eulerian_row(int d) {
    std::vector<Integer> row{0, 1};  // A(1,0), A(1,1)
    for (int n = 2; n <= d; ++n) {
        std::vector<Integer> next(static_cast<size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) {
            Integer v = 0;
            if (static_cast<size_t>(i) < row.size()) v += Integer(i) * row[static_cast<size_t>(i)];
            if (static_cast<size_t>(i - 1) < row.size())
                v += Integer(n - i + 1) * row[static_cast<size_t>(i - 1)];
            next[static_cast<size_t>(i)] = v;
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

EulerianTable::EulerianTable(int max_index) : max_index_(max_index) {
    if (max_index < 1) throw std::invalid_argument("EulerianTable: max_index must be >= 1");
    rows_.reserve(static_cast<size_t>(max_index));
    for (int d = 1; d <= max_index; ++d) rows_.push_back(eulerian_row(d));
}

const std::vector<Integer>& EulerianTable::row(int d) const {
    if (d < 1 || d > max_index_) throw std::out_of_range("EulerianTable::row");
    return rows_[static_cast<size_t>(d - 1)];
}

Integer EulerianTable::number(int d, long i) const {
    const auto& r = row(d);
    if (i < 0 || i >= static_cast<long>(r.size())) return 0;
    return r[static_cast<size_t>(i)];
}

Polynomial eulerian_polynomial(int i) {
    if (i < -1) throw std::invalid_argument("eulerian_polynomial: index must be >= -1");
    if (i <= 0) return Polynomial::constant(1);
    const auto row = eulerian_row(i);
    std::vector<Rational> coeffs(row.size());
    for (size_t j = 0; j < row.size(); ++j) coeffs[j] = Rational(row[j]);
    return Polynomial(std::move(coeffs));
}

Integer eulerian_number(int d, long i) {
    if (d < 1) throw std::invalid_argument("eulerian_number: d must be >= 1");
    if (i < 0 || i > d) return 0;
    return eulerian_row(d)[static_cast<size_t>(i)];
}

IntMatrix l_matrix(int d) {
    if (d < 1) throw std::invalid_argument("l_matrix: d must be >= 1");
    IntMatrix l(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        const Polynomial column = eulerian_polynomial(i - 1) * one_minus_t_power(d - i);
        for (int j = 0; j <= d; ++j) {
            const Rational c = column.coeff(j);
            l.at(j, i) = c.get_num();  // exact integers by construction
        }
    }
    return l;
}

}  // namespace veronese
