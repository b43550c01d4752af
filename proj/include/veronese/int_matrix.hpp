#pragma once

#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

/// Small dense matrix of arbitrary-precision integers (row-major).
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Integer>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Fraction-free Bareiss elimination.
    Integer determinant() const;

private:
    int rows_;
    int cols_;
    std::vector<Integer> data_;
};

}  // namespace veronese
