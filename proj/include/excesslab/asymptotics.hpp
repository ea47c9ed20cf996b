#pragma once

#include <utility>

#include "excesslab/excess_table.hpp"
#include "excesslab/log_real.hpp"

namespace excesslab {

/// Saddle-point evaluation of t_{a,n}(rho n + beta):
///   t = n!/(2 sqrt(pi n)) * exp(n u0) (1-u0)^{1-beta} / (u0^n (1-u0)^{rho n})
/// with u0 = 1 + rho/2 - sqrt(rho (1 + rho/4)), the root of h'(u) = 0
/// for h(u) = u - ln u - rho ln(1-u). At this order the value does not
/// depend on a; a is recorded for the caller.
struct SaddleEvaluation {
    double rho;
    double beta;
    double a;
    double u0;
    double h_u0;
    double tau;
    LogReal value;
};

SaddleEvaluation saddle_tree_polynomial(double a, long n, double rho, double beta);

/// h(u0) evaluated directly; small-rho expansion
/// 1 + (1/2 + 1/2 ln(1/rho)) rho + rho^{3/2}/3 - rho^{5/2}/120 + O(rho^3).
double h_at_saddle(double rho);

/// 6l c'(k,k+l+1) / (k^2 c(k,k+l)) from exact integers; tends to 1 as
/// k grows with l fixed, l << k^{1/3}.
double bridge_internal_ratio(const ExcessTable& table, int k, int l);

/// Main factor of the c^r(k,k+l+1) upper bound:
///   (1/(sqrt(48 pi) l)) (e/12l)^{l/2} k^{k+3l/2+3/2} exp(sqrt(3) l^{3/2}/sqrt(k))
LogReal cr_upper_bound(int k, int l);

struct GammaTailCoefficients {
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
};

/// Numeric log-space evaluation of
///   sum_{k=1}^{n/c} k^a exp(-k^3/24n^2 + c1 k^4/n^3 + c2 l k/n
///                            + c3 l^2/k + c4 l^3/k^2 + c5 l^{3/2}/sqrt(k))
/// paired with the closed form 2^{a+1} 3^{(a-2)/3} Gamma((a+1)/3) n^{2(a+1)/3}.
std::pair<LogReal, LogReal> gamma_tail_sum(double a, long n,
                                       const GammaTailCoefficients& c, double l,
                                       double cutoff_divisor);

}  // namespace excesslab
