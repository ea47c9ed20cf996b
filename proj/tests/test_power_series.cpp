#include <doctest.h>

#include <random>

#include "excesslab/power_series.hpp"

using namespace excesslab;

TEST_CASE("tree series coefficients are n^(n-1)/n!") {
    const int order = 12;
    PowerSeries t = tree_series(order);
    CHECK(t.coeff(0) == 0);
    Integer fact = 1;
    for (int n = 1; n <= order; ++n) {
        fact *= n;
        CHECK(t.coeff(n) == ratio(ipow(n, n - 1), fact));
    }
}

TEST_CASE("tree series satisfies T = z exp(T)") {
    const int order = 12;
    PowerSeries t = tree_series(order);
    PowerSeries z(order);
    z.coeff(1) = 1;
    CHECK(t == z * t.exp());
}

TEST_CASE("series multiplication is commutative and associative") {
    std::mt19937 rng(5);
    auto random_series = [&](int order) {
        PowerSeries s(order);
        for (int i = 0; i <= order; ++i)
            s.coeff(i) = ratio(static_cast<long>(rng() % 19) - 9,
                               1 + static_cast<long>(rng() % 7));
        return s;
    };
    for (int rep = 0; rep < 20; ++rep) {
        PowerSeries a = random_series(6), b = random_series(6),
                    c = random_series(6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("geometric inverse powers of 1-T") {
    PowerSeries t = tree_series(6);
    PowerSeries g1 = series_geom_inv_pow(t, 1);
    CHECK(g1.coeff(0) == 1);
    PowerSeries g2 = series_geom_inv_pow(t, 2);
    CHECK(g2.coeff(1) == 2);  // 1! [z] (1-T)^{-2} = 2
    // (1-T)^{-2} = ((1-T)^{-1})^2
    CHECK(g2 == g1 * g1);
}

TEST_CASE("tree polynomial anchors") {
    CHECK(tree_polynomial(1, 1, 1) == 1);
    CHECK(tree_polynomial(2, 2, 1) == 2);
    CHECK(tree_polynomial(0, 1, 2) == 2);
}

TEST_CASE("tree polynomial agrees with the series route") {
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned y = 1; y <= 4; ++y)
            for (unsigned n = 1; n <= 10; ++n) {
                if (a + y < 1) continue;
                const Integer fast = tree_polynomial(a, n, y);
                CHECK(fast == tree_polynomial_series(a, n, y));
                CHECK(fast >= 0);
            }
}
