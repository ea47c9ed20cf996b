#include "excesslab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "excesslab/asymptotics.hpp"
#include "excesslab/brute_force.hpp"
#include "excesslab/excess_table.hpp"
#include "excesslab/expectations.hpp"
#include "excesslab/power_series.hpp"
#include "excesslab/process_sim.hpp"
#include "excesslab/wright.hpp"

namespace excesslab {

namespace {

// master seed for every Monte Carlo check; pinned so the measured
// windows below stay reproducible
constexpr uint64_t kMcSeed = 20260825;

using Runner = std::function<bool(std::ostringstream&)>;

CheckResult timed(const std::string& name, const Runner& fn) {
    CheckResult r;
    r.name = name;
    std::ostringstream detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = fn(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.detail = detail.str();
    return r;
}

bool check_oracle_equivalence(std::ostringstream& out) {
    ExcessTable table(7, 14);
    for (int k = 3; k <= 7; ++k) {
        const int l_top = k * (k - 1) / 2 - k;
        for (int l = -1; l <= l_top; ++l) {
            if (table.count(k, l) != brute_force_count(k, k + l)) {
                out << "mismatch at k=" << k << " l=" << l;
                return false;
            }
        }
    }
    out << "recurrence = exhaustive enumeration for k in 3..7";
    return true;
}

bool check_cayley_base(std::ostringstream& out) {
    ExcessTable table(200, -1);
    for (int k = 1; k <= 200; ++k) {
        const Integer expect = (k == 1) ? Integer(1) : ipow(k, k - 2);
        if (table.count(k, -1) != expect) {
            out << "tree count wrong at k=" << k;
            return false;
        }
    }
    out << "c(k,k-1) = k^(k-2) for k <= 200";
    return true;
}

bool check_wright_dual_path(std::ostringstream& out) {
    const int l_top = 8;
    const int order = 3 * l_top + 3;
    ExcessTable table(order, l_top);
    WrightConstants wc(l_top, wright_c1(table));
    if (wc.b(1) != Rational(5, 24) || wc.b(2) != Rational(5, 16) ||
        wc.b(3) != Rational(1105, 1152)) {
        out << "b base values wrong";
        return false;
    }
    for (int l = 1; l <= l_top; ++l) {
        BasisDecomposition dec(table, l, 3 * l + 3);
        if (!dec.reconstructs(table, 3 * l + 3)) {
            out << "reconstruction residual at l=" << l;
            return false;
        }
        if (dec.omega(3 * l) != wc.b(l) || dec.omega(3 * l - 1) != -wc.c(l)) {
            out << "recurrence/decomposition disagree at l=" << l;
            return false;
        }
    }
    out << "b_l, c_l match the series decomposition for l <= " << l_top;
    return true;
}

bool check_wright_inequalities(std::ostringstream& out) {
    ExcessTable table(60, 4);
    WrightConstants wc(4, Rational(19, 24));
    for (int l = 1; l <= 4; ++l) {
        for (int k = 1; k <= 60; ++k) {
            const Rational upper =
                wc.b(l) * Rational(tree_polynomial(0, k, 3 * l));
            const Rational lower =
                upper - wc.c(l) * Rational(tree_polynomial(0, k, 3 * l - 1));
            const Rational val(table.count(k, l));
            if (val > upper || val < lower) {
                out << "sandwich fails at k=" << k << " l=" << l;
                return false;
            }
        }
    }
    out << "counts inside the tree-polynomial sandwich, l <= 4, k <= 60";
    return true;
}

bool check_alpha_beta_identity(std::ostringstream& out) {
    ExcessTable table(12, 3);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            for (int l = -1; l <= 3; ++l)
                if (!alpha_beta_identity_check(table, n, k, l)) {
                    out << "identity fails at n=" << n << " k=" << k
                        << " l=" << l;
                    return false;
                }
    out << "closed form = Beta-integral form for all n <= 12";
    return true;
}

bool check_n4_anchor(std::ostringstream& out) {
    ExcessTable table(4, 2);
    if (expected_Y_exact(table, 4, 0) != 1) {
        out << "alpha summation E[Y(0)] != 1 at n=4";
        return false;
    }
    const auto ex = exhaustive_small(4, 2);
    if (ex.Y[0] != 1) {
        out << "exhaustive E[Y(0)] != 1 at n=4";
        return false;
    }
    for (std::size_t l = 0; l < ex.Z.size(); ++l)
        if (ex.Z[l] != 0) {
            out << "exhaustive E[Z(" << l << ")] != 0 at n=4";
            return false;
        }
    out << "E[Y(0)] = 1 exactly by both routes; Z identically 0";
    return true;
}

bool check_saddle_trend(std::ostringstream& out) {
    const double rho = 0.002;
    double prev = 1e300;
    double last = 0;
    for (long n : {500l, 2000l, 8000l}) {
        const long y = std::lround(rho * n);
        const Integer exact = tree_polynomial(0, n, y);
        const auto ev = saddle_tree_polynomial(0, n, rho, 0.0);
        const double rel =
            std::exp(ev.value.logmag - LogReal::from_integer(exact).logmag) -
            1.0;
        out << "n=" << n << " relerr=" << rel << "; ";
        if (std::fabs(rel) >= std::fabs(prev)) return false;
        prev = std::fabs(rel);
        last = std::fabs(rel);
    }
    return last < 0.6;
}

bool check_bridge_ratio_trend(std::ostringstream& out) {
    ExcessTable table(400, 7);
    double prev = 1e300;
    for (int k : {100, 200, 400}) {
        const double r = bridge_internal_ratio(table, k, 6);
        out << "k=" << k << " ratio=" << r << "; ";
        if (std::fabs(r - 1.0) >= prev) return false;
        prev = std::fabs(r - 1.0);
    }
    return true;
}

bool check_gamma_sum(std::ostringstream& out) {
    const double a = (3.0 * 10 + 1) / 2;
    const auto [num, closed] = gamma_tail_sum(a, 1000000, {}, 10, 2.0);
    const double ratio = (num / closed).to_double();
    out << "numeric/closed = " << ratio;
    return ratio > 0.95 && ratio < 1.05;
}

struct McRuns {
    MonteCarloResult a;  // n=1e5,  L=10
    MonteCarloResult b;  // n=3e5,  L=12
    MonteCarloResult c;  // n=1e4,  L=4
};

McRuns run_mc(int threads) {
    McRuns r;
    // the largest run gets more trials: the limit-law check needs enough
    // resolution to see nonzero mass at Y >= 2 for small l
    r.a = monte_carlo(100000, 10, 600, kMcSeed, threads);
    r.b = monte_carlo(300000, 12, 200, kMcSeed, threads);
    r.c = monte_carlo(10000, 4, 200, kMcSeed, threads);
    return r;
}

double v_norm(const MonteCarloResult& mc, int l) {
    return std::cbrt(12.0 * l) * std::pow(static_cast<double>(mc.n), 2.0 / 3.0);
}

double v_ratio(const MonteCarloResult& mc, int l) {
    return mc.V_mean[l] / v_norm(mc, l);
}

bool check_expectation_windows(const McRuns& mc, std::ostringstream& out) {
    const double rv = v_ratio(mc.a, 8);
    const double ry = mc.a.Y_mean[8];
    const double rz = 3.0 * 8 * mc.a.Z_mean[8];
    out << "n=1e5 l=8: V_ratio=" << rv << " Y=" << ry << " 3lZ=" << rz << "; ";
    if (rv < 0.6 || rv > 1.4) return false;
    if (ry < 0.5 || ry > 1.5) return false;
    if (rz < 0.3 || rz > 3.0) return false;
    // the same ratios must sit closer to 1 at (3e5, 12) than at (1e4, 4),
    // up to two combined standard errors: the asymptotic gap between the
    // two configurations is comparable to the Monte Carlo noise at this
    // trial count, so a strict comparison would flip sign run to run
    const double bv = v_ratio(mc.b, 12), cv = v_ratio(mc.c, 4);
    const double by = mc.b.Y_mean[12], cy = mc.c.Y_mean[4];
    const double bz = 3.0 * 12 * mc.b.Z_mean[12],
                 cz = 3.0 * 4 * mc.c.Z_mean[4];
    const double sv =
        mc.b.V_se[12] / v_norm(mc.b, 12) + mc.c.V_se[4] / v_norm(mc.c, 4);
    const double sy = mc.b.Y_se[12] + mc.c.Y_se[4];
    const double sz = 3.0 * 12 * mc.b.Z_se[12] + 3.0 * 4 * mc.c.Z_se[4];
    out << "trend V " << cv << "->" << bv << " (se " << sv << "), Y " << cy
        << "->" << by << " (se " << sy << "), 3lZ " << cz << "->" << bz
        << " (se " << sz << ")";
    return std::fabs(bv - 1) < std::fabs(cv - 1) + 2 * sv &&
           std::fabs(by - 1) < std::fabs(cy - 1) + 2 * sy &&
           std::fabs(bz - 1) < std::fabs(cz - 1) + 2 * sz;
}

bool check_limit_law_echo(const McRuns& mc, std::ostringstream& out) {
    // P(Y = 1) must rise strictly; the factorial moment E[Y(Y-1)] must
    // fall toward 0 -- non-increasing step by step (the sample mean hits
    // exactly 0 once no trial sees Y >= 2, so ties at 0 are legitimate)
    // with a strict drop from the first l to the last
    double prev_frac = -1, prev_f2 = 1e300;
    double first_f2 = 0, last_f2 = 0;
    for (int l : {2, 6, 10}) {
        const double frac = mc.a.Y_eq1_frac[l];
        const double f2 = mc.a.Y_fact2_mean[l];
        out << "l=" << l << " P(Y=1)=" << frac << " E[Y(Y-1)]=" << f2 << "; ";
        if (frac <= prev_frac || f2 > prev_f2) return false;
        if (l == 2) first_f2 = f2;
        last_f2 = f2;
        prev_frac = frac;
        prev_f2 = f2;
    }
    return last_f2 < first_f2;
}

bool check_sim_invariants(int threads, std::ostringstream& out) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const long n = 2 + static_cast<long>(rng() % 199);
        const int L = static_cast<int>(rng() % 7);
        const uint64_t seed = rng();
        // paranoid mode re-audits the excess bookkeeping after every edge
        const auto res = run_process(n, L, seed, true);
        const auto oracle = vertex_trajectory_oracle(n, L, seed);
        for (int l = 0; l <= L; ++l)
            if (res.V[l] != oracle[l]) {
                out << "V mismatch n=" << n << " L=" << L << " seed=" << seed
                    << " l=" << l;
                return false;
            }
    }
    const auto one = monte_carlo(150, 4, 40, 99, 1);
    const auto many = monte_carlo(150, 4, 40, 99, threads > 0 ? threads : 4);
    for (int l = 0; l <= 4; ++l)
        if (one.V_mean[l] != many.V_mean[l] || one.Y_mean[l] != many.Y_mean[l] ||
            one.Z_mean[l] != many.Z_mean[l]) {
            out << "aggregate depends on thread count";
            return false;
        }
    out << "1000 fuzz trials: excess sums hold, V matches trajectory "
           "oracle, thread-count independent";
    return true;
}

bool check_head_share(std::ostringstream& out) {
    ExcessTable table(120, 10);
    const double share = alpha_head_share(table, 100000, 10);
    out << "omega=" << omega_cutoff(100000, 10) << " head share=" << share;
    return share < 1e-3;
}

}  // namespace

std::vector<CheckResult> verify_checks(bool full, int threads) {
    std::vector<CheckResult> results;
    results.push_back(timed("oracle-equivalence", check_oracle_equivalence));
    results.push_back(timed("cayley-base", check_cayley_base));
    results.push_back(timed("wright-dual-path", check_wright_dual_path));
    results.push_back(timed("wright-inequalities", check_wright_inequalities));
    results.push_back(timed("alpha-beta-identity", check_alpha_beta_identity));
    results.push_back(timed("n4-anchor", check_n4_anchor));
    if (!full) return results;

    results.push_back(timed("saddle-trend", check_saddle_trend));
    results.push_back(timed("bridge-ratio-trend", check_bridge_ratio_trend));
    results.push_back(timed("gamma-sum", check_gamma_sum));

    McRuns mc;
    results.push_back(timed("expectation-windows", [&](std::ostringstream& o) {
        mc = run_mc(threads);
        return check_expectation_windows(mc, o);
    }));
    results.push_back(timed("limit-law-echo", [&](std::ostringstream& o) {
        return check_limit_law_echo(mc, o);
    }));
    results.push_back(timed("sim-invariants", [&](std::ostringstream& o) {
        return check_sim_invariants(threads, o);
    }));
    results.push_back(timed("head-share", check_head_share));
    return results;
}

}  // namespace excesslab
