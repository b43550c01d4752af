#pragma once

#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

/// The whole row C(r,d,i) for i = 0..r*d (windowed-sum dynamic programming,
/// exact integers). C(r,0,·) gives the single-entry row {1}.
std::vector<Integer> count_row(long r, long d);

/// C(r,d,i): compositions of i into exactly d nonnegative parts, each <= r.
/// Total in i: returns 0 for i < 0 or i > r*d, and delta_{0,i} when d = 0.
Integer count_bounded(long r, long d, long i);

/// Same count through partitions of i contained in the box (r^d), each
/// weighted by the multinomial d!/(m_1! ... m_r! (d-len)!). Requires d >= 1.
Integer count_via_partitions(long r, long d, long i);

/// Brute-force oracle: all qualifying tuples in lexicographic order.
std::vector<std::vector<int>> enumerate_bounded(int r, int d, long i);

}  // namespace veronese
