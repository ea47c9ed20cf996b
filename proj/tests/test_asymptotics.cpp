#include <doctest.h>

#include <cmath>

#include "excesslab/asymptotics.hpp"
#include "excesslab/power_series.hpp"

using namespace excesslab;

TEST_CASE("saddle point location") {
    const double rho = 1e-4;
    const auto ev = saddle_tree_polynomial(0, 100, rho, 0.0);
    // series u0 = 1 - sqrt(rho) + rho/2 - rho^{3/2}/8 + O(rho^2)
    const double series =
        1.0 - std::sqrt(rho) + rho / 2 - std::pow(rho, 1.5) / 8;
    CHECK(ev.u0 == doctest::Approx(series).epsilon(1e-7));
    // stationarity of h(u) = u - ln u - rho ln(1-u)
    const double hprime = 1.0 - 1.0 / ev.u0 + rho / (1.0 - ev.u0);
    CHECK(std::fabs(hprime) < 1e-12);
    CHECK(ev.tau == doctest::Approx(1.0 - ev.u0));
}

TEST_CASE("h at the saddle") {
    CHECK(h_at_saddle(1e-9) == doctest::Approx(1.0).epsilon(1e-4));
    const double rho = 0.01;
    const double expansion =
        1.0 + (0.5 + 0.5 * std::log(1.0 / rho)) * rho +
        std::pow(rho, 1.5) / 3.0 - std::pow(rho, 2.5) / 120.0;
    CHECK(std::fabs(h_at_saddle(rho) - expansion) < 1e-5);
    CHECK(h_at_saddle(0.25) > 1.0);
    double prev = h_at_saddle(0.01);
    for (double r : {0.05, 0.1, 0.2, 0.4}) {
        CHECK(h_at_saddle(r) > prev);
        prev = h_at_saddle(r);
    }
}

TEST_CASE("saddle value against the exact polynomial") {
    const long n = 2000;
    const double rho = 0.05;
    const long y = std::lround(rho * n);
    const Integer exact = tree_polynomial(0, n, y);
    const auto ev = saddle_tree_polynomial(0, n, rho, 0.0);
    const double ratio =
        std::exp(ev.value.logmag - LogReal::from_integer(exact).logmag);
    CHECK(ratio > 0.6);
    CHECK(ratio < 1.6);
}

TEST_CASE("bridge ratio approaches 1 from below") {
    ExcessTable table(120, 7);
    const double r40 = bridge_internal_ratio(table, 40, 6);
    const double r80 = bridge_internal_ratio(table, 80, 6);
    const double r120 = bridge_internal_ratio(table, 120, 6);
    CHECK(r120 == doctest::Approx(0.35875901437190855).epsilon(1e-6));
    CHECK(r40 > 0);
    CHECK(std::fabs(r80 - 1) < std::fabs(r40 - 1));
    CHECK(std::fabs(r120 - 1) < std::fabs(r80 - 1));
}

TEST_CASE("bridge count upper bound") {
    ExcessTable table(60, 4);
    CHECK(std::isfinite(cr_upper_bound(50, 3).logmag));
    CHECK(cr_upper_bound(50, 3).logmag > 0);
    for (int l = 2; l <= 3; ++l) {
        double prev = -1e300;
        for (int k = 30; k <= 60; ++k) {
            const double bound = cr_upper_bound(k, l).logmag;
            CHECK(bound > prev);  // monotone in k
            prev = bound;
            const Integer cp = bridge_count_exact(table, k, l);
            // slack factor 2 absorbs the bound's dropped error factors
            CHECK(LogReal::from_integer(cp).logmag < bound + std::log(2.0));
        }
    }
}

TEST_CASE("gamma sum identity") {
    const auto [num, closed] = gamma_tail_sum(10.0, 1000000, {}, 0.0, 2.0);
    const double ratio = (num / closed).to_double();
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.02));
    // doubling n scales the closed form by 2^{2(a+1)/3}
    const auto [num2, closed2] = gamma_tail_sum(10.0, 2000000, {}, 0.0, 2.0);
    (void)num2;
    CHECK((closed2 / closed).to_double() ==
          doctest::Approx(std::pow(2.0, 22.0 / 3.0)).epsilon(1e-9));
}
