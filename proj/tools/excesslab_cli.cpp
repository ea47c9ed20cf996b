// excesslab: tables, constants, asymptotics, expectations, simulation
// and the cross-verification suite, behind one executable.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "excesslab/asymptotics.hpp"
#include "excesslab/excess_table.hpp"
#include "excesslab/expectations.hpp"
#include "excesslab/power_series.hpp"
#include "excesslab/process_sim.hpp"
#include "excesslab/verify.hpp"
#include "excesslab/wright.hpp"

namespace {

using excesslab::ExcessTable;
using excesslab::Rational;
using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// fixed 17-significant-digit rendering so identical flags give
// byte-identical output
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string rat(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("EXCESSLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // modules interpret 0 as hardware concurrency
}

void print_schema() {
    json s;
    s["schema_version"] = kSchemaVersion;
    s["table"] = {{"format", "csv"}, {"columns", {"k", "ell", "count"}}};
    s["constants"] = {{"format", "csv"},
                      {"columns", {"ell", "b", "c", "d"}},
                      {"note", "b, c are exact rationals rendered num/den"}};
    s["decompose"] = {{"format", "csv"}, {"columns", {"s", "omega"}}};
    s["treepoly"] = {{"format", "csv"}, {"columns", {"a", "n", "y", "value"}}};
    s["alpha"] = {{"format", "json"},
                  {"keys", {"n", "k", "ell", "alpha", "log_alpha", "sign"}}};
    s["expect"] = {{"format", "json"},
                   {"keys",
                    {"n", "ell", "E_Y", "E_Z", "E_V", "V_formula_ratio",
                     "cutoff_used", "exact_k_ceiling", "tail_model"}}};
    s["simulate"] = {
        {"format", "json|csv"},
        {"keys",
         {"n", "lmax", "trials", "seed", "per_ell", "edges_mean"}},
        {"per_ell_keys",
         {"ell", "V_mean", "V_se", "X_mean", "Y_mean", "Y_se", "Z_mean",
          "Z_se", "Y_fact2_mean"}}};
    s["verify"] = {{"format", "json"},
                   {"keys", {"level", "passed", "checks"}},
                   {"check_keys", {"name", "passed", "seconds", "detail"}}};
    std::cout << s.dump(2) << "\n";
}

int cmd_table(int kmax, int lmax) {
    ExcessTable table(kmax, lmax);
    std::cout << "k,ell,count\n";
    for (int k = 1; k <= kmax; ++k)
        for (int l = -1; l <= lmax; ++l)
            std::cout << k << "," << l << "," << table.count(k, l).get_str()
                      << "\n";
    return 0;
}

int cmd_constants(int lmax) {
    const int order = 3 * 1 + 3 + 2;
    ExcessTable table(order, 1);
    excesslab::WrightConstants wc(lmax, excesslab::wright_c1(table));
    std::cout << "ell,b,c,d\n";
    for (int l = 1; l <= lmax; ++l)
        std::cout << l << "," << rat(wc.b(l)) << "," << rat(wc.c(l)) << ","
                  << fmt(wc.d(l)) << "\n";
    return 0;
}

int cmd_decompose(int ell, int order) {
    if (order < 3 * ell + 3) order = 3 * ell + 3;
    ExcessTable table(order, ell);
    excesslab::BasisDecomposition dec(table, ell, order);
    std::cout << "s,omega\n";
    for (int s = dec.s_min(); s <= dec.s_max(); ++s)
        std::cout << s << "," << rat(dec.omega(s)) << "\n";
    return 0;
}

int cmd_treepoly(int a, int n, int y) {
    std::cout << "a,n,y,value\n";
    std::cout << a << "," << n << "," << y << ","
              << excesslab::tree_polynomial(a, n, y).get_str() << "\n";
    return 0;
}

int cmd_alpha(long n, long k, int ell) {
    const long kc = std::min<long>(n, 200);
    ExcessTable table(static_cast<int>(std::min<long>(k, kc)),
                      std::max(ell, 0));
    excesslab::LogReal count;
    if (k <= table.k_max() && ell <= table.l_max())
        count = excesslab::LogReal::from_integer(
            table.count(static_cast<int>(k), ell));
    else
        count =
            excesslab::LogReal::from_log(excesslab::tail_count_log(k, ell));
    const auto a = excesslab::alpha_log(n, k, ell, count);
    json out;
    out["n"] = n;
    out["k"] = k;
    out["ell"] = ell;
    out["alpha"] = fmt(a.to_double());
    out["log_alpha"] = fmt(a.logmag);
    out["sign"] = a.sign;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_expect(long n, int ell, long seam) {
    const int l_cap = std::max(ell, 1);
    ExcessTable table(120, std::max(l_cap, 10));
    const auto rep = excesslab::expectation_report(table, n, ell, seam);
    json out;
    out["n"] = rep.n;
    out["ell"] = rep.ell;
    out["E_Y"] = fmt(rep.E_Y);
    out["E_Z"] = fmt(rep.E_Z);
    out["E_V"] = fmt(rep.E_V);
    out["V_formula_ratio"] = fmt(rep.V_formula_ratio);
    out["cutoff_used"] = rep.cutoff_used;
    out["exact_k_ceiling"] = rep.exact_k_ceiling;
    out["tail_model"] = rep.tail_model;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_simulate(long n, int lmax, long trials, uint64_t seed, int threads,
                 const std::string& format) {
    const auto mc = excesslab::monte_carlo(n, lmax, trials, seed, threads);
    if (format == "csv") {
        std::cout << "ell,V_mean,V_se,X_mean,Y_mean,Y_se,Z_mean,Z_se,"
                     "Y_fact2_mean\n";
        for (int l = 0; l <= lmax; ++l)
            std::cout << l << "," << fmt(mc.V_mean[l]) << "," << fmt(mc.V_se[l])
                      << "," << fmt(mc.X_mean[l]) << "," << fmt(mc.Y_mean[l])
                      << "," << fmt(mc.Y_se[l]) << "," << fmt(mc.Z_mean[l])
                      << "," << fmt(mc.Z_se[l]) << ","
                      << fmt(mc.Y_fact2_mean[l]) << "\n";
        std::cout << "edges_mean," << fmt(mc.edges_mean) << "\n";
        return 0;
    }
    json out;
    out["n"] = mc.n;
    out["lmax"] = mc.L;
    out["trials"] = mc.trials;
    out["seed"] = mc.seed;
    out["per_ell"] = json::array();
    for (int l = 0; l <= lmax; ++l) {
        json row;
        row["ell"] = l;
        row["V_mean"] = fmt(mc.V_mean[l]);
        row["V_se"] = fmt(mc.V_se[l]);
        row["X_mean"] = fmt(mc.X_mean[l]);
        row["Y_mean"] = fmt(mc.Y_mean[l]);
        row["Y_se"] = fmt(mc.Y_se[l]);
        row["Z_mean"] = fmt(mc.Z_mean[l]);
        row["Z_se"] = fmt(mc.Z_se[l]);
        row["Y_fact2_mean"] = fmt(mc.Y_fact2_mean[l]);
        out["per_ell"].push_back(row);
    }
    out["edges_mean"] = fmt(mc.edges_mean);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& level, int threads) {
    const auto checks = excesslab::verify_checks(level == "full", threads);
    bool all = true;
    json out;
    out["level"] = level;
    out["checks"] = json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        json row;
        row["name"] = c.name;
        row["passed"] = c.passed;
        row["seconds"] = fmt(c.seconds);
        row["detail"] = c.detail;
        out["checks"].push_back(row);
    }
    out["passed"] = all;
    std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"excesslab: excess-indexed component counts, Wright "
                 "constants, transition expectations and process simulation"};
    app.require_subcommand(0, 1);

    bool schema = false;
    app.add_flag("--schema", schema, "print output schemas and exit");
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker thread cap (default: machine parallelism; env "
                   "EXCESSLAB_THREADS is the fallback)");

    auto* t = app.add_subcommand("table", "connected-graph counts by excess");
    int kmax = 7, lmax = 3;
    t->add_option("--kmax", kmax, "largest component order")->required();
    t->add_option("--lmax", lmax, "largest excess")->required();
    std::string t_format = "csv";
    t->add_option("--format", t_format)->check(CLI::IsMember({"csv"}));

    auto* c = app.add_subcommand("constants", "Wright constants b, c, d");
    int c_lmax = 8;
    c->add_option("--lmax", c_lmax)->required();

    auto* d = app.add_subcommand("decompose",
                                 "coefficients of W_l over powers of 1/(1-T)");
    int d_ell = 1, d_order = 0;
    d->add_option("--ell", d_ell)->required();
    d->add_option("--order", d_order, "working series order");

    auto* tp = app.add_subcommand("treepoly", "exact t_{a,n}(y)");
    int tp_a = 0, tp_n = 1, tp_y = 1;
    tp->add_option("--a", tp_a)->required();
    tp->add_option("--n", tp_n)->required();
    tp->add_option("--y", tp_y)->required();

    auto* al = app.add_subcommand("alpha", "expected l->l+1 internal-edge "
                                           "transitions for one k");
    long al_n = 0, al_k = 0;
    int al_ell = 0;
    al->add_option("--n", al_n)->required();
    al->add_option("--k", al_k)->required();
    al->add_option("--ell", al_ell)->required();

    auto* ex = app.add_subcommand("expect", "E[Y], E[Z], E[V] for one (n, l)");
    long ex_n = 0, ex_seam = -1;
    int ex_ell = 1;
    ex->add_option("--n", ex_n)->required();
    ex->add_option("--ell", ex_ell)->required();
    ex->add_option("--seam", ex_seam, "largest k served by exact counts");

    auto* si = app.add_subcommand("simulate", "Monte Carlo process runs");
    long si_n = 0, si_trials = 100;
    int si_lmax = 4;
    uint64_t si_seed = 1;
    std::string si_format = "json";
    si->add_option("--n", si_n)->required();
    si->add_option("--lmax", si_lmax)->required();
    si->add_option("--trials", si_trials);
    si->add_option("--seed", si_seed);
    si->add_option("--format", si_format)->check(CLI::IsMember({"json", "csv"}));

    auto* ve = app.add_subcommand("verify", "cross-module verification suite");
    std::string ve_level = "quick";
    ve->add_option("--level", ve_level)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (schema) {
        print_schema();
        return 0;
    }
    const int nthreads = resolve_threads(threads);

    try {
        if (*t) return cmd_table(kmax, lmax);
        if (*c) return cmd_constants(c_lmax);
        if (*d) return cmd_decompose(d_ell, d_order);
        if (*tp) return cmd_treepoly(tp_a, tp_n, tp_y);
        if (*al) return cmd_alpha(al_n, al_k, al_ell);
        if (*ex) return cmd_expect(ex_n, ex_ell, ex_seam);
        if (*si)
            return cmd_simulate(si_n, si_lmax, si_trials, si_seed, nthreads,
                                si_format);
        if (*ve) return cmd_verify(ve_level, nthreads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << app.help();
    return 2;
}
