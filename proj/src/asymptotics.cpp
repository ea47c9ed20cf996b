#include "excesslab/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace excesslab {

namespace {

double saddle_u0(double rho) {
    // root of h'(u) = 1 - 1/u + rho/(1-u) inside (0,1)
    return 1.0 + rho / 2.0 - std::sqrt(rho * (1.0 + rho / 4.0));
}

}  // namespace

double h_at_saddle(double rho) {
    if (rho <= 0) throw std::invalid_argument("h_at_saddle: rho > 0 required");
    const double u0 = saddle_u0(rho);
    return u0 - std::log(u0) - rho * std::log(1.0 - u0);
}

SaddleEvaluation saddle_tree_polynomial(double a, long n, double rho,
                                        double beta) {
    if (n < 1) throw std::invalid_argument("saddle_tree_polynomial: n >= 1");
    if (rho <= 0)
        throw std::invalid_argument("saddle_tree_polynomial: rho > 0 required");
    SaddleEvaluation ev;
    ev.rho = rho;
    ev.beta = beta;
    ev.a = a;
    ev.u0 = saddle_u0(rho);
    ev.h_u0 = ev.u0 - std::log(ev.u0) - rho * std::log(1.0 - ev.u0);
    ev.tau = 1.0 - ev.u0;
    const double nd = static_cast<double>(n);
    const double log_n_fact = std::lgamma(nd + 1.0);
    const double lm = log_n_fact - std::log(2.0 * std::sqrt(M_PI * nd)) +
                      nd * ev.u0 + (1.0 - beta) * std::log(1.0 - ev.u0) -
                      nd * std::log(ev.u0) - rho * nd * std::log(1.0 - ev.u0);
    ev.value = LogReal::from_log(lm);
    return ev;
}

double bridge_internal_ratio(const ExcessTable& table, int k, int l) {
    if (l < 1) throw std::invalid_argument("bridge_internal_ratio: l >= 1 required");
    const Integer c = table.count(k, l);
    if (c == 0) throw std::invalid_argument("bridge_internal_ratio: c(k,k+l) = 0");
    const Integer cp = bridge_count_exact(table, k, l);
    const LogReal num = LogReal::from_double(6.0 * l) * LogReal::from_integer(cp);
    const LogReal den = LogReal::from_double(static_cast<double>(k) *
                                             static_cast<double>(k)) *
                        LogReal::from_integer(c);
    return (num / den).to_double();
}

LogReal cr_upper_bound(int k, int l) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("cr_upper_bound: k, l >= 1 required");
    const double kd = k, ld = l;
    const double lm = -std::log(std::sqrt(48.0 * M_PI) * ld) +
                      (ld / 2.0) * std::log(M_E / (12.0 * ld)) +
                      (kd + 1.5 * ld + 1.5) * std::log(kd) +
                      std::sqrt(3.0) * std::pow(ld, 1.5) / std::sqrt(kd);
    return LogReal::from_log(lm);
}

std::pair<LogReal, LogReal> gamma_tail_sum(double a, long n,
                                       const GammaTailCoefficients& c, double l,
                                       double cutoff_divisor) {
    if (n < 1 || cutoff_divisor <= 0)
        throw std::invalid_argument("gamma_tail_sum: bad arguments");
    const double nd = static_cast<double>(n);
    const long k_hi = static_cast<long>(nd / cutoff_divisor);
    LogReal sum = LogReal::zero();
    for (long k = 1; k <= k_hi; ++k) {
        const double kd = static_cast<double>(k);
        const double expo = -kd * kd * kd / (24.0 * nd * nd) +
                            c.c1 * kd * kd * kd * kd / (nd * nd * nd) +
                            c.c2 * l * kd / nd + c.c3 * l * l / kd +
                            c.c4 * l * l * l / (kd * kd) +
                            c.c5 * std::pow(l, 1.5) / std::sqrt(kd);
        sum = sum + LogReal::from_log(a * std::log(kd) + expo);
    }
    const double lm = (a + 1.0) * M_LN2 + ((a - 2.0) / 3.0) * std::log(3.0) +
                      std::lgamma((a + 1.0) / 3.0) +
                      (2.0 * (a + 1.0) / 3.0) * std::log(nd);
    return {sum, LogReal::from_log(lm)};
}

}  // namespace excesslab
