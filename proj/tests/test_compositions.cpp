#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "veronese/compositions.hpp"

using namespace veronese;

TEST_CASE("count_bounded examples") {
    CHECK(count_bounded(5, 0, 0) == 1);
    CHECK(count_bounded(5, 0, 3) == 0);
    CHECK(count_bounded(2, 3, 6) == 1);  // only (2,2,2)
    CHECK(count_bounded(1, 2, 1) == 2);
    CHECK(count_bounded(3, 2, -1) == 0);
    CHECK(count_bounded(3, 2, 7) == 0);
}

TEST_CASE("count_via_partitions examples") {
    CHECK(count_via_partitions(1, 2, 1) == 2);
    CHECK(count_via_partitions(2, 3, 6) == 1);
    CHECK(count_via_partitions(3, 2, 3) == 4);
    CHECK(count_via_partitions(4, 3, 0) == 1);
}

TEST_CASE("enumerate_bounded examples") {
    CHECK(enumerate_bounded(1, 2, 1) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(enumerate_bounded(2, 1, 3).empty());
    CHECK(enumerate_bounded(1, 3, 3) == std::vector<std::vector<int>>{{1, 1, 1}});
    CHECK(enumerate_bounded(2, 0, 0) == std::vector<std::vector<int>>{{}});
    CHECK(enumerate_bounded(2, 0, 1).empty());
}

TEST_CASE("enumeration is lexicographically sorted") {
    const auto tuples = enumerate_bounded(3, 3, 5);
    for (size_t k = 1; k < tuples.size(); ++k) CHECK(tuples[k - 1] < tuples[k]);
}

TEST_CASE("triple agreement: DP = partition formula = enumeration") {
    for (long r = 0; r <= 4; ++r)
        for (long d = 0; d <= 5; ++d)
            for (long i = 0; i <= r * d; ++i) {
                const Integer dp = count_bounded(r, d, i);
                CHECK(dp == Integer(enumerate_bounded(static_cast<int>(r), static_cast<int>(d), i).size()));
                if (d >= 1) CHECK(dp == count_via_partitions(r, d, i));
            }
}

TEST_CASE("symmetry under part complement") {
    for (long r = 0; r <= 6; ++r)
        for (long d = 0; d <= 6; ++d)
            for (long i = 0; i <= r * d; ++i)
                CHECK(count_bounded(r, d, i) == count_bounded(r, d, r * d - i));
}

TEST_CASE("row sums and the unbounded limit") {
    for (long r = 0; r <= 6; ++r)
        for (long d = 0; d <= 6; ++d) {
            Integer sum = 0;
            for (long i = 0; i <= r * d; ++i) sum += count_bounded(r, d, i);
            CHECK(sum == int_pow(Integer(r + 1), static_cast<unsigned long>(d)));
        }
    // for r >= i the bound is inactive: C(r,d,i) = binom(i+d-1, d-1)
    for (long d = 1; d <= 5; ++d)
        for (long r = 1; r <= 6; ++r)
            for (long i = 0; i <= r; ++i)
                CHECK(count_bounded(r, d, i) == binomial(i + d - 1, d - 1));
}
