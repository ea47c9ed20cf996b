#include <doctest.h>

#include <cmath>

#include "excesslab/brute_force.hpp"
#include "excesslab/excess_table.hpp"

using namespace excesslab;

TEST_CASE("small counts") {
    ExcessTable t(8, 6);
    CHECK(t.count(3, 0) == 1);
    CHECK(t.count(4, 0) == 15);
    CHECK(t.count(4, 1) == 6);
    CHECK(t.count(4, 2) == 1);
    CHECK(t.count(5, 0) == 222);
    CHECK(t.count(5, 1) == 205);
    const long unicyclic[] = {6, 205, 5700, 156555, 4483360};  // n = 4..8
    for (int n = 4; n <= 8; ++n) CHECK(t.count(n, 1) == unicyclic[n - 4]);
    const long zero_excess[] = {1, 15, 222, 3660, 68295, 1436568};  // n = 3..8
    for (int n = 3; n <= 8; ++n) CHECK(t.count(n, 0) == zero_excess[n - 3]);
}

TEST_CASE("tree row is Cayley") {
    ExcessTable t(50, 0);
    CHECK(t.count(1, -1) == 1);
    CHECK(t.count(2, -1) == 1);
    for (int k = 3; k <= 50; ++k) CHECK(t.count(k, -1) == ipow(k, k - 2));
}

TEST_CASE("zero threshold") {
    ExcessTable t(12, 5);
    for (int l = 0; l <= 5; ++l) {
        const int k_min =
            static_cast<int>(std::ceil((3.0 + std::sqrt(9.0 + 8.0 * l)) / 2.0));
        for (int k = 1; k <= 12; ++k) {
            if (k < k_min)
                CHECK(t.count(k, l) == 0);
            else
                CHECK(t.count(k, l) > 0);
        }
    }
    CHECK(t.count(4, 3) == 0);  // beyond C(4,2) edges
    CHECK_THROWS_AS(t.count(13, 0), std::out_of_range);
}

TEST_CASE("brute force rows pin down the table") {
    const long row_sums[] = {1, 4, 38, 728, 26704, 1866256};  // k = 2..7
    for (int k = 2; k <= 7; ++k) {
        const auto row = brute_force_row(k);
        Integer total = 0;
        for (const auto& v : row) total += v;
        CHECK(total == row_sums[k - 2]);
    }
    CHECK(brute_force_count(5, 4) == 125);
    CHECK(brute_force_count(5, 5) == 222);
    CHECK(brute_force_count(5, 10) == 1);
    CHECK(brute_force_count(4, 7) == 0);
    CHECK(brute_force_count(3, 2) == 3);
}

TEST_CASE("recurrence equals brute force everywhere it can") {
    ExcessTable t(7, 14);
    for (int k = 3; k <= 7; ++k)
        for (int l = -1; l <= k * (k - 1) / 2 - k; ++l)
            CHECK(t.count(k, l) == brute_force_count(k, k + l));
}

TEST_CASE("bridge counts") {
    ExcessTable t(12, 4);
    CHECK(bridge_count_exact(t, 5, 0) == 0);
    CHECK(bridge_count_exact(t, 6, 0) == 90);
    CHECK(bridge_count_exact(t, 6, 0) == brute_force_bridge_count(6, 0));
    CHECK(bridge_count_exact(t, 7, 1) == 2520);
    CHECK(bridge_count_exact(t, 7, 1) == brute_force_bridge_count(7, 1));
    for (int k = 4; k <= 7; ++k)
        for (int l = 0; l <= 3; ++l)
            CHECK(bridge_count_exact(t, k, l) == brute_force_bridge_count(k, l));
}

TEST_CASE("restricted bridge counts") {
    ExcessTable t(10, 3);
    CHECK(bridge_count_general(t, 6, 0, 0) == bridge_count_exact(t, 6, 0));
    CHECK(bridge_count_general(t, 10, 2, 1) == 304746750);
    // for l = 2 the p = 0 and p = 2 terms are mirror images, so
    // exact - two_sided(r=1) = 2 (exact - one_sided(r=1))
    const Integer exact = bridge_count_exact(t, 10, 2);
    const Integer two = bridge_count_general(t, 10, 2, 1);
    const Integer one = bridge_count_general(t, 10, 2, 1, true);
    CHECK(exact - two == 2 * (exact - one));
    CHECK_THROWS_AS(bridge_count_general(t, 10, 2, 2), std::invalid_argument);
}
