#include "excesslab/process_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace excesslab {

ExcessDsu::ExcessDsu(long n)
    : parent_(n), size_(n, 1), excess_(n, -1), credited_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0l);
}

long ExcessDsu::find(long v) {
    long root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        long next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

long ExcessDsu::add_internal(long v) {
    const long root = find(v);
    ++excess_[root];
    return root;
}

long ExcessDsu::merge(long ra, long rb) {
    if (ra == rb) throw std::logic_error("ExcessDsu::merge: same root");
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    const int e = excess_[ra] + excess_[rb] + 1;
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    excess_[ra] = e;
    credited_[ra] |= credited_[rb];
    --components_;
    return ra;
}

bool ExcessDsu::excess_sum_ok(long edges_added) {
    long total = 0;
    const long n = static_cast<long>(parent_.size());
    for (long v = 0; v < n; ++v)
        if (find(v) == v) total += excess_[v];
    return total == edges_added - n;
}

EdgeStream::EdgeStream(long n, uint64_t seed)
    : n_(n),
      total_pairs_(static_cast<uint64_t>(n) * (n - 1) / 2),
      rng_(seed) {
    if (n < 2) throw std::invalid_argument("EdgeStream: n >= 2 required");
    seen_.reserve(256);
}

bool EdgeStream::exhausted() const { return seen_.size() >= total_pairs_; }

std::pair<long, long> EdgeStream::next() {
    if (exhausted()) throw std::logic_error("EdgeStream: exhausted");
    std::uniform_int_distribution<long> pick(0, n_ - 1);
    for (;;) {
        const long u = pick(rng_), v = pick(rng_);
        if (u == v) continue;
        const long a = std::min(u, v), b = std::max(u, v);
        const uint64_t key = static_cast<uint64_t>(a) * n_ + b;
        if (seen_.insert(key).second) return {a, b};
    }
}

namespace {

struct Sim {
    ExcessDsu dsu;
    int L;
    TrialResult res;

    Sim(long n, int L_)
        : dsu(n), L(L_) {
        res.Y.assign(L + 1, 0);
        res.Z.assign(L + 1, 0);
        res.V.assign(L + 1, 0);
    }

    // processes one edge; returns true when the stop condition holds
    bool step(long u, long v) {
        const long ru = dsu.find(u), rv = dsu.find(v);
        ++res.edges;
        long root;
        if (ru == rv) {
            const int e = dsu.excess(ru);
            root = dsu.add_internal(u);
            if (e >= 0 && e <= L) ++res.Y[e];
            const int ne = e + 1;
            if (ne >= 0 && ne <= L) {
                res.V[ne] += dsu.size(root);
                dsu.set_credited(root, ne);
            }
        } else {
            const int e1 = dsu.excess(ru), e2 = dsu.excess(rv);
            const long s1 = dsu.size(ru), s2 = dsu.size(rv);
            if (e1 >= 0 && e2 >= 0 && e1 + e2 <= L) ++res.Z[e1 + e2];
            root = dsu.merge(ru, rv);
            const int ne = e1 + e2 + 1;
            if (e1 >= 0 && e2 >= 0) {
                // fresh excess value for every member
                if (ne <= L) {
                    res.V[ne] += s1 + s2;
                    dsu.set_credited(root, ne);
                }
            } else if (ne >= 0) {
                // tree absorption: excess unchanged, only the tree side
                // is new to it
                if (ne <= L && (dsu.credited(root) >> ne & 1))
                    res.V[ne] += (e1 == -1) ? s1 : s2;
            }
        }
        return dsu.components() == 1 && dsu.excess(dsu.find(u)) > L;
    }
};

}  // namespace

TrialResult run_process(long n, int L, uint64_t seed, bool paranoid) {
    if (n < 2 || L < 0 || L > 62)
        throw std::invalid_argument("run_process: need n >= 2, 0 <= L <= 62");
    Sim sim(n, L);
    EdgeStream stream(n, seed);
    while (!stream.exhausted()) {
        const auto [u, v] = stream.next();
        const bool stop = sim.step(u, v);
        if (paranoid && !sim.dsu.excess_sum_ok(sim.res.edges))
            throw std::logic_error("run_process: excess sum violated");
        if (stop) break;
    }
    return sim.res;
}

std::vector<long> vertex_trajectory_oracle(long n, int L, uint64_t seed) {
    if (n < 2 || L < 0 || L > 62)
        throw std::invalid_argument("vertex_trajectory_oracle: bad arguments");
    std::vector<long> comp(n);
    std::iota(comp.begin(), comp.end(), 0l);
    std::vector<std::vector<long>> members(n);
    for (long v = 0; v < n; ++v) members[v] = {v};
    std::vector<int> excess(n, -1);
    std::vector<uint64_t> attained(n, 0);
    long n_comp = n;

    auto mark = [&](long c, int l) {
        if (l < 0 || l > L) return;
        for (long v : members[c]) attained[v] |= 1ull << l;
    };

    EdgeStream stream(n, seed);
    while (!stream.exhausted()) {
        const auto [u, v] = stream.next();
        long cu = comp[u], cv = comp[v];
        if (cu == cv) {
            ++excess[cu];
            mark(cu, excess[cu]);
        } else {
            if (members[cu].size() < members[cv].size()) std::swap(cu, cv);
            excess[cu] = excess[cu] + excess[cv] + 1;
            for (long w : members[cv]) {
                comp[w] = cu;
                members[cu].push_back(w);
            }
            members[cv].clear();
            --n_comp;
            mark(cu, excess[cu]);
        }
        const long c = comp[u];
        if (n_comp == 1 && excess[c] > L) break;
    }

    std::vector<long> V(L + 1, 0);
    for (long v = 0; v < n; ++v)
        for (int l = 0; l <= L; ++l)
            if (attained[v] >> l & 1) ++V[l];
    return V;
}

ExactExpectations exhaustive_small(long n, int L, bool allow_large) {
    const long n_max = allow_large ? 5 : 4;
    if (n < 2 || n > n_max)
        throw std::invalid_argument("exhaustive_small: n too large");
    std::vector<std::pair<long, long>> edges;
    for (long b = 1; b < n; ++b)
        for (long a = 0; a < b; ++a) edges.push_back({a, b});
    const int m = static_cast<int>(edges.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);

    std::vector<long> sum_Y(L + 1, 0), sum_Z(L + 1, 0), sum_V(L + 1, 0);
    long n_orders = 0;
    do {
        Sim sim(n, L);
        for (int i = 0; i < m; ++i) {
            if (sim.step(edges[order[i]].first, edges[order[i]].second)) break;
        }
        for (int l = 0; l <= L; ++l) {
            sum_Y[l] += sim.res.Y[l];
            sum_Z[l] += sim.res.Z[l];
            sum_V[l] += sim.res.V[l];
        }
        ++n_orders;
    } while (std::next_permutation(order.begin(), order.end()));

    ExactExpectations ex;
    ex.Y.resize(L + 1);
    ex.Z.resize(L + 1);
    ex.X.resize(L + 1);
    ex.V.resize(L + 1);
    for (int l = 0; l <= L; ++l) {
        ex.Y[l] = Rational(sum_Y[l], n_orders);
        ex.Z[l] = Rational(sum_Z[l], n_orders);
        ex.X[l] = ex.Y[l] + ex.Z[l];
        ex.V[l] = Rational(sum_V[l], n_orders);
        ex.Y[l].canonicalize();
        ex.Z[l].canonicalize();
        ex.X[l].canonicalize();
        ex.V[l].canonicalize();
    }
    return ex;
}

uint64_t trial_seed(uint64_t master_seed, long trial) {
    uint64_t z = master_seed + (static_cast<uint64_t>(trial) + 1) *
                                   0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

MonteCarloResult monte_carlo(long n, int L, long trials, uint64_t master_seed,
                             int threads) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials >= 1");
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<long>(threads, trials));

    std::vector<TrialResult> results(trials);
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= trials) return;
            results[i] = run_process(n, L, trial_seed(master_seed, i));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    MonteCarloResult mc;
    mc.n = n;
    mc.L = L;
    mc.trials = trials;
    mc.seed = master_seed;
    const int nl = L + 1;
    mc.V_mean.assign(nl, 0);
    mc.V_se.assign(nl, 0);
    mc.X_mean.assign(nl, 0);
    mc.Y_mean.assign(nl, 0);
    mc.Y_se.assign(nl, 0);
    mc.Z_mean.assign(nl, 0);
    mc.Z_se.assign(nl, 0);
    mc.Y_fact2_mean.assign(nl, 0);
    mc.Y_eq1_frac.assign(nl, 0);

    for (const auto& r : results) {
        mc.edges_mean += static_cast<double>(r.edges);
        for (int l = 0; l <= L; ++l) {
            mc.V_mean[l] += static_cast<double>(r.V[l]);
            mc.Y_mean[l] += static_cast<double>(r.Y[l]);
            mc.Z_mean[l] += static_cast<double>(r.Z[l]);
            mc.Y_fact2_mean[l] +=
                static_cast<double>(r.Y[l]) * (r.Y[l] - 1);
            if (r.Y[l] == 1) mc.Y_eq1_frac[l] += 1.0;
        }
    }
    const double nt = static_cast<double>(trials);
    mc.edges_mean /= nt;
    for (int l = 0; l <= L; ++l) {
        mc.V_mean[l] /= nt;
        mc.Y_mean[l] /= nt;
        mc.Z_mean[l] /= nt;
        mc.Y_fact2_mean[l] /= nt;
        mc.Y_eq1_frac[l] /= nt;
        mc.X_mean[l] = mc.Y_mean[l] + mc.Z_mean[l];
    }
    if (trials > 1) {
        for (const auto& r : results) {
            for (int l = 0; l <= L; ++l) {
                const double dv = r.V[l] - mc.V_mean[l];
                const double dy = r.Y[l] - mc.Y_mean[l];
                const double dz = r.Z[l] - mc.Z_mean[l];
                mc.V_se[l] += dv * dv;
                mc.Y_se[l] += dy * dy;
                mc.Z_se[l] += dz * dz;
            }
        }
        for (int l = 0; l <= L; ++l) {
            mc.V_se[l] = std::sqrt(mc.V_se[l] / (nt - 1) / nt);
            mc.Y_se[l] = std::sqrt(mc.Y_se[l] / (nt - 1) / nt);
            mc.Z_se[l] = std::sqrt(mc.Z_se[l] / (nt - 1) / nt);
        }
    }
    return mc;
}

}  // namespace excesslab
