#include "veronese/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace veronese {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
    IntMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace veronese
