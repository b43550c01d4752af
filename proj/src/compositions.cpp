#include "veronese/compositions.hpp"

#include <map>
#include <stdexcept>

namespace veronese {

std::vector<Integer> count_row(long r, long d) {
    if (r < 0 || d < 0) throw std::invalid_argument("count_row: r and d must be nonnegative");
    std::vector<Integer> row{1};
    for (long part = 0; part < d; ++part) {
        std::vector<Integer> next(row.size() + static_cast<size_t>(r));
        Integer window = 0;  // sum of row[m-r .. m]
        for (size_t m = 0; m < next.size(); ++m) {
            if (m < row.size()) window += row[m];
            if (m >= static_cast<size_t>(r) + 1 && m - static_cast<size_t>(r) - 1 < row.size())
                window -= row[m - static_cast<size_t>(r) - 1];
            next[m] = window;
        }
        row = std::move(next);
    }
    return row;
}

Integer count_bounded(long r, long d, long i) {
    if (r < 0 || d < 0) throw std::invalid_argument("count_bounded: r and d must be nonnegative");
    if (d == 0) return i == 0 ? 1 : 0;
    if (i < 0 || i > r * d) return 0;
    return count_row(r, d)[static_cast<size_t>(i)];
}

namespace {

// Sums the multinomial weight over partitions of `left` with parts <= maxpart
// and at most `room` parts, extending the multiplicity map in place.
Integer partition_sum(long left, long maxpart, long room, long d, std::map<long, long>& mult) {
    if (left == 0) {
        // room = d - len(lambda): the parts of the multinomial that stay zero
        Integer weight = factorial(static_cast<unsigned long>(d));
        weight /= factorial(static_cast<unsigned long>(room));
        for (const auto& [part, count] : mult) weight /= factorial(static_cast<unsigned long>(count));
        return weight;
    }
    if (room == 0 || maxpart == 0) return 0;
    Integer total = 0;
    for (long p = std::min(maxpart, left); p >= 1; --p) {
        ++mult[p];
        total += partition_sum(left - p, p, room - 1, d, mult);
        if (--mult[p] == 0) mult.erase(p);
    }
    return total;
}

}  // namespace

Integer count_via_partitions(long r, long d, long i) {
    if (r < 0 || d < 1 || i < 0)
        throw std::invalid_argument("count_via_partitions: need r >= 0, d >= 1, i >= 0");
    std::map<long, long> mult;
    return partition_sum(i, r, d, d, mult);
}

namespace {

void enumerate_rec(int r, int parts_left, long remaining, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    for (int a = 0; a <= r; ++a) {
        const long rest = remaining - a;
        if (rest < 0) break;
        if (rest > static_cast<long>(r) * (parts_left - 1)) continue;
        prefix.push_back(a);
        enumerate_rec(r, parts_left - 1, rest, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_bounded(int r, int d, long i) {
    if (r < 0 || d < 0) throw std::invalid_argument("enumerate_bounded: r and d must be nonnegative");
    std::vector<std::vector<int>> out;
    if (i < 0 || i > static_cast<long>(r) * d) return out;
    std::vector<int> prefix;
    enumerate_rec(r, d, i, prefix, out);
    return out;
}

}  // namespace veronese
