#pragma once

#include <vector>

#include "veronese/int_matrix.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// Triangular table of Eulerian numbers A(d,i) = #{sigma in S_d with
/// des(sigma) = i-1}, for 1 <= d <= max_index and 0 <= i <= d. Immutable
/// after construction, so concurrent readers are safe.
class EulerianTable {
public:
    explicit EulerianTable(int max_index);

    int max_index() const { return max_index_; }
    /// Row d as A(d,0)..A(d,d). Requires 1 <= d <= max_index.
    const std::vector<Integer>& row(int d) const;
    /// A(d,i); zero when i is out of range. Requires 1 <= d <= max_index.
    Integer number(int d, long i) const;

private:
    int max_index_;
    std::vector<std::vector<Integer>> rows_;
};

/// Eulerian polynomial A_i(t) = sum over S_i of t^{des+1}; A_{-1} = A_0 = 1.
/// Computed through the recurrence A(d,i) = i A(d-1,i) + (d-i+1) A(d-1,i-1).
Polynomial eulerian_polynomial(int i);

/// Coefficient of t^i in A_d(t). Requires d >= 1; out-of-range i gives 0.
Integer eulerian_number(int d, long i);

/// The base-change matrix L_d: column i holds the coefficients of
/// A_{i-1}(t) (1-t)^{d-i}, rows indexed by powers of t, 0 <= i,j <= d.
IntMatrix l_matrix(int d);

}  // namespace veronese
