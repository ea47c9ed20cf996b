#include <doctest.h>

#include <cmath>

#include "excesslab/wright.hpp"

using namespace excesslab;

TEST_CASE("b and c values") {
    ExcessTable table(8, 1);
    const Rational c1 = wright_c1(table);
    CHECK(c1 == Rational(19, 24));
    WrightConstants wc(30, c1);
    CHECK(wc.b(1) == Rational(5, 24));
    CHECK(wc.b(2) == Rational(5, 16));
    CHECK(wc.b(3) == Rational(1105, 1152));
    CHECK(wc.b(4) == Rational(565, 128));
    CHECK(wc.c(2) == Rational(65, 48));
    CHECK(wc.c(3) == Rational(1945, 384));
    CHECK(wc.c(4) == Rational(21295, 768));
    for (int l = 1; l <= 30; ++l) {
        CHECK(wc.b(l) > 0);
        CHECK(wc.c(l) > 0);
    }
    // c_l = O(l b_l): the normalized ratio stays bounded
    for (int l = 1; l <= 30; ++l)
        CHECK(wc.c(l) / (l * wc.b(l)) < 4);
}

TEST_CASE("decomposition matches the recurrences") {
    const int l_top = 5;
    ExcessTable table(3 * l_top + 3, l_top);
    WrightConstants wc(l_top, Rational(19, 24));
    for (int l = 1; l <= l_top; ++l) {
        BasisDecomposition dec(table, l, 3 * l + 3);
        CHECK(dec.s_min() == -2);
        CHECK(dec.omega(3 * l) == wc.b(l));
        CHECK(dec.omega(3 * l - 1) == -wc.c(l));
        CHECK(dec.reconstructs(table, 3 * l + 3));
        CHECK(dec.omega(3 * l + 1) == 0);  // outside the support
    }
}

TEST_CASE("d sequence approaches 1/(2 pi) from below") {
    WrightConstants wc(40, Rational(19, 24));
    const double limit = 1.0 / (2.0 * M_PI);
    // d_1 = d_2 = 5/36 exactly; growth is strict only from l = 2 on
    CHECK(wc.d(1) == Rational(5, 36).get_d());
    CHECK(wc.d(2) == Rational(5, 36).get_d());
    for (int l = 2; l < 40; ++l) CHECK(wc.d(l + 1) > wc.d(l));
    for (int l = 1; l <= 40; ++l) CHECK(wc.d(l) < limit);
    // gaps d_{l+1} - d_l shrink like 1/l^2; strict decrease sets in at l=3
    for (int l = 3; l < 39; ++l)
        CHECK(wc.d(l + 1) - wc.d(l) > wc.d(l + 2) - wc.d(l + 1));
}
