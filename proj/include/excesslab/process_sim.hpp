#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "excesslab/rational.hpp"

namespace excesslab {

/// Union-find over the process graph with per-root excess (edges minus
/// vertices of the component) and a bitmask of excess values already
/// credited to V. Union by size, path compression; merging combines
/// excesses as e1 + e2 + 1.
class ExcessDsu {
public:
    explicit ExcessDsu(long n);

    long find(long v);
    long size(long root) const { return size_[root]; }
    int excess(long root) const { return excess_[root]; }
    long components() const { return components_; }

    /// Adds one internal edge: excess of v's component increases by 1.
    /// Returns the root.
    long add_internal(long v);

    /// Merges the components of a and b (must differ). Returns the new
    /// root.
    long merge(long ra, long rb);

    uint64_t credited(long root) const { return credited_[root]; }
    void set_credited(long root, int l) { credited_[root] |= 1ull << l; }

    /// Full-scan check that root excesses sum to edges - n.
    bool excess_sum_ok(long edges_added);

private:
    std::vector<long> parent_;
    std::vector<long> size_;
    std::vector<int> excess_;
    std::vector<uint64_t> credited_;
    long components_;
};

/// Uniformly random stream of distinct vertex pairs, by rejection
/// sampling against a seen-set. exhausted() once all C(n,2) pairs are
/// out.
class EdgeStream {
public:
    EdgeStream(long n, uint64_t seed);
    bool exhausted() const;
    std::pair<long, long> next();

private:
    long n_;
    uint64_t total_pairs_;
    std::mt19937_64 rng_;
    std::unordered_set<uint64_t> seen_;
};

/// Per-trial event counts, indexed by excess 0..L. Y[l] counts internal
/// edges raising a component from excess l to l+1; Z[l] counts bridges
/// merging two components of excesses >= 0 summing to l; V[l] counts
/// vertices ever in an l-component. X = Y + Z elementwise.
struct TrialResult {
    std::vector<long> Y, Z, V;
    long edges = 0;
};

/// Runs one trial: adds random edges until the graph is connected with
/// excess > L, or every pair has been used. paranoid turns on the
/// O(n)-per-edge excess-sum audit.
TrialResult run_process(long n, int L, uint64_t seed, bool paranoid = false);

/// Independent V computation replaying the same edge stream: every
/// vertex records the set of excess values its component passes
/// through; V[l] counts vertices whose record contains l.
std::vector<long> vertex_trajectory_oracle(long n, int L, uint64_t seed);

/// Exact expectations over all edge orders of K_n (n <= 4 by default;
/// n = 5 is 10! orders, allowed behind the flag).
struct ExactExpectations {
    std::vector<Rational> Y, Z, X, V;
};
ExactExpectations exhaustive_small(long n, int L, bool allow_large = false);

struct MonteCarloResult {
    long n = 0;
    int L = 0;
    long trials = 0;
    uint64_t seed = 0;
    double edges_mean = 0;
    // indexed by excess 0..L
    std::vector<double> V_mean, V_se, X_mean, Y_mean, Y_se, Z_mean, Z_se;
    std::vector<double> Y_fact2_mean;  // mean of Y(Y-1)
    std::vector<double> Y_eq1_frac;    // fraction of trials with Y = 1
};

/// Deterministic per-trial seed: splitmix64 finalization of
/// master + (trial+1) * 0x9e3779b97f4a7c15.
uint64_t trial_seed(uint64_t master_seed, long trial);

/// Runs trials in parallel (threads = 0 means hardware concurrency);
/// per-trial results land in a fixed slot so the aggregate is
/// independent of the thread count.
MonteCarloResult monte_carlo(long n, int L, long trials, uint64_t master_seed,
                             int threads = 0);

}  // namespace excesslab
