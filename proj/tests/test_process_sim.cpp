#include <doctest.h>

#include <cmath>
#include <set>

#include "excesslab/process_sim.hpp"

using namespace excesslab;

TEST_CASE("dsu excess algebra") {
    ExcessDsu dsu(6);
    CHECK(dsu.components() == 6);
    // tree + tree -> tree
    long r = dsu.merge(dsu.find(0), dsu.find(1));
    CHECK(dsu.excess(r) == -1);
    CHECK(dsu.size(r) == 2);
    // internal edge: -1 -> 0
    r = dsu.add_internal(0);
    CHECK(dsu.excess(r) == 0);
    // unicyclic + tree -> unicyclic
    r = dsu.merge(dsu.find(0), dsu.find(2));
    CHECK(dsu.excess(r) == 0);
    // unicyclic + unicyclic -> excess 1
    dsu.merge(dsu.find(3), dsu.find(4));
    dsu.add_internal(3);
    r = dsu.merge(dsu.find(0), dsu.find(3));
    CHECK(dsu.excess(r) == 1);
    CHECK(dsu.size(r) == 5);
    CHECK(dsu.components() == 2);
    CHECK(dsu.excess_sum_ok(6));  // 6 edges processed above
}

TEST_CASE("edge stream is a permutation of all pairs") {
    EdgeStream s(5, 42);
    std::set<std::pair<long, long>> seen;
    while (!s.exhausted()) {
        auto e = s.next();
        CHECK(e.first < e.second);
        CHECK(seen.insert(e).second);
    }
    CHECK(seen.size() == 10);
    // same seed, same order
    EdgeStream a(50, 7), b(50, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("triangle runs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = run_process(3, 0, seed, true);
        CHECK(r.V[0] == 3);
        CHECK(r.Y[0] == 0);
        CHECK(r.Z[0] == 0);
        CHECK(r.edges == 3);
    }
}

TEST_CASE("n=4 runs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = run_process(4, 1, seed, true);
        CHECK(r.Y[0] == 1);
        CHECK(r.Z[0] == 0);
        CHECK(r.Z[1] == 0);
    }
}

TEST_CASE("exhaustive small orders") {
    const auto e3 = exhaustive_small(3, 0);
    CHECK(e3.V[0] == 3);
    CHECK(e3.X[0] == 0);
    const auto e4 = exhaustive_small(4, 1);
    CHECK(e4.Y[0] == 1);
    for (const auto& z : e4.Z) CHECK(z == 0);
    CHECK(e4.V[0] > 0);
    CHECK_THROWS_AS(exhaustive_small(5, 0), std::invalid_argument);
}

TEST_CASE("monte carlo agrees with the exhaustive oracle") {
    const auto exact = exhaustive_small(4, 1);
    const auto mc = monte_carlo(4, 1, 4000, 11);
    CHECK(mc.Y_mean[0] == 1.0);  // every run has exactly one 0 -> 1 edge
    for (int l = 0; l <= 1; ++l) {
        const double se = std::max(mc.V_se[l], 1e-9);
        CHECK(std::fabs(mc.V_mean[l] - exact.V[l].get_d()) < 3 * se + 1e-9);
    }
}

TEST_CASE("trajectory oracle matches the credited counts") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        const auto r = run_process(50, 3, seed, true);
        const auto v = vertex_trajectory_oracle(50, 3, seed);
        for (int l = 0; l <= 3; ++l) CHECK(r.V[l] == v[l]);
    }
}

TEST_CASE("aggregates are thread-count independent") {
    const auto a = monte_carlo(120, 3, 32, 5, 1);
    const auto b = monte_carlo(120, 3, 32, 5, 8);
    CHECK(a.edges_mean == b.edges_mean);
    for (int l = 0; l <= 3; ++l) {
        CHECK(a.V_mean[l] == b.V_mean[l]);
        CHECK(a.Y_mean[l] == b.Y_mean[l]);
        CHECK(a.Z_mean[l] == b.Z_mean[l]);
        CHECK(a.V_se[l] == b.V_se[l]);
    }
}

TEST_CASE("edge consumption stays near the connectivity threshold") {
    const long n = 2000;
    const int L = 2;
    const auto mc = monte_carlo(n, L, 20, 3);
    CHECK(mc.edges_mean < 3.0 * n * std::log(static_cast<double>(n)) + 50.0 * L);
}

TEST_CASE("derived seeds differ") {
    std::set<uint64_t> seeds;
    for (long i = 0; i < 1000; ++i) seeds.insert(trial_seed(99, i));
    CHECK(seeds.size() == 1000);
}
