#pragma once

#include <string>

#include "excesslab/excess_table.hpp"
#include "excesslab/log_real.hpp"

namespace excesslab {

/// Expected number of internal-edge transitions l -> l+1 seen by a
/// k-component over the whole process, for one choice of vertex set:
///
///   alpha(l;k) = (n)_k (k+l)!/k! c(k,k+l) (k^2-3k-2l)/2 (M-1)!/(M+k+l)!
///
/// with M = nk - k(k+3)/2 - l. Zero when k^2-3k-2l <= 0 or M < 1
/// (inadmissible geometry). count is c(k,k+l), supplied exactly or from
/// the tail model.
LogReal alpha_log(long n, long k, int l, const LogReal& count);

/// Exact-rational alpha for small n; the correctness anchor for the
/// log-space path.
Rational alpha_exact(long n, long k, int l, const Integer& count);

/// Checks, in exact arithmetic, that the closed form above equals the
/// prefactor times the Beta value Gamma(k+l+1) Gamma(M) / Gamma(M+k+l+1)
/// coming from integrating t^{k+l} (1-t)^{M-1} over [0,1].
bool alpha_beta_identity_check(const ExcessTable& table, long n, long k, int l);

/// Expected number of bridges joining a (l-p)-component on k1 vertices
/// to a p-component on k2 vertices (ordered pair of roles):
///   C(n,k) C(k,k1) k1 c(k1,k1+l-p) k2 c(k2,k2+p) B(k+l+1, M), k = k1+k2.
LogReal beta_pair(const ExcessTable& table, long n, long k1, long k2, int p,
                  int l);

/// Wright-asymptotic main term for log c(k,k+l), used above the exact
/// seam: c(k,k+l) ~ (1/2) sqrt(3/pi) (e/12l)^{l/2} k^{k+3l/2-1/2}.
double tail_count_log(long k, int l);

/// ceil((l/10) ln(n/l)): the k below which transition mass is negligible.
long omega_cutoff(long n, int l);

struct ExpectationReport {
    long n = 0;
    int ell = 0;
    double E_Y = 0;
    double E_Z = 0;
    double E_V = 0;
    double V_formula_ratio = 0;  // E_V / ((12 l)^{1/3} n^{2/3})
    long cutoff_used = 0;
    long exact_k_ceiling = 0;
    std::string tail_model;  // "exact" or "hybrid-asymptotic"
};

/// E[Y] = sum_k alpha(l;k), exact counts for k <= seam, tail model above.
/// seam < 0 means "as far as the table reaches".
double expected_Y(const ExcessTable& table, long n, int l, long seam = -1);

/// E[Z] = sum_k C(n,k) c'(k,k+l+1) B(k+l+1, M); c' exact below the seam,
/// k^2/(6l) c(k,k+l) above. l = 0 has no tail model: n must stay within
/// the exact table's reach.
double expected_Z(const ExcessTable& table, long n, int l, long seam = -1);

/// E[V] = sum_k k alpha(l-1;k); requires l >= 1.
double expected_V(const ExcessTable& table, long n, int l, long seam = -1);

/// Fraction of the alpha sum carried by k < omega_cutoff(n,l).
double alpha_head_share(const ExcessTable& table, long n, int l,
                        long seam = -1);

ExpectationReport expectation_report(const ExcessTable& table, long n, int l,
                                     long seam = -1);

/// Exact-rational E[Y] for the anchor cases (small n, counts integral).
Rational expected_Y_exact(const ExcessTable& table, long n, int l);

}  // namespace excesslab
