#include "excesslab/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace excesslab {

namespace {

// M = nk - k(k+3)/2 - l, the (1-t) exponent's integer shift
long alpha_m(long n, long k, int l) {
    return n * k - k * (k + 3) / 2 - l;
}

long exact_ceiling(const ExcessTable& table, int l, long seam) {
    if (l > table.l_max()) return 0;
    long ceil = table.k_max();
    if (seam >= 0) ceil = std::min(ceil, seam);
    return ceil;
}

double lchoose(long n, long k) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

// log Beta(k+l+1, M) = lgamma(k+l+1) + lgamma(M) - lgamma(M+k+l+1)
double lbeta_weight(long n, long k, int l) {
    const double m = static_cast<double>(alpha_m(n, k, l));
    return std::lgamma(static_cast<double>(k + l) + 1.0) + std::lgamma(m) -
           std::lgamma(m + static_cast<double>(k + l) + 1.0);
}

}  // namespace

LogReal alpha_log(long n, long k, int l, const LogReal& count) {
    const long pre = k * k - 3 * k - 2 * l;
    const long m = alpha_m(n, k, l);
    if (pre <= 0 || m < 1 || count.sign == 0) return LogReal::zero();
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double md = static_cast<double>(m);
    const double lm = std::lgamma(nd + 1.0) - std::lgamma(nd - kd + 1.0) +
                      std::lgamma(kd + l + 1.0) - std::lgamma(kd + 1.0) +
                      count.logmag + std::log(static_cast<double>(pre) / 2.0) +
                      std::lgamma(md) - std::lgamma(md + kd + l + 1.0);
    return LogReal::from_log(lm, count.sign);
}

Rational alpha_exact(long n, long k, int l, const Integer& count) {
    const long pre = k * k - 3 * k - 2 * l;
    const long m = alpha_m(n, k, l);
    if (pre <= 0 || m < 1 || count == 0) return Rational(0);
    Rational r = ratio(factorial(n), factorial(n - k));
    r *= ratio(factorial(k + l), factorial(k));
    r *= count;
    r *= ratio(pre, 2);
    r *= ratio(factorial(m - 1), factorial(m + k + l));
    return r;
}

bool alpha_beta_identity_check(const ExcessTable& table, long n, long k,
                               int l) {
    const Integer& c = table.count(static_cast<int>(k), l);
    const Rational lhs = alpha_exact(n, k, l, c);
    const long pre = k * k - 3 * k - 2 * l;
    const long m = alpha_m(n, k, l);
    if (pre <= 0 || m < 1 || c == 0) return lhs == 0;
    // prefactor (n)_k / k! regrouped as a binomial; Beta written as the
    // Gamma product of the integral t^{k+l} (1-t)^{M-1}
    Rational beta =
        ratio(factorial(k + l) * factorial(m - 1), factorial(m + k + l));
    Rational rhs = Rational(binomial(n, k)) * c * ratio(pre, 2) * beta;
    return lhs == rhs;
}

LogReal beta_pair(const ExcessTable& table, long n, long k1, long k2, int p,
                  int l) {
    if (p < 0 || p > l) throw std::invalid_argument("beta_pair: p in 0..l");
    if (k1 < 1 || k2 < 1 || k1 + k2 > n)
        throw std::invalid_argument("beta_pair: bad component sizes");
    const long k = k1 + k2;
    const Integer& c1 = table.count(static_cast<int>(k1), l - p);
    const Integer& c2 = table.count(static_cast<int>(k2), p);
    if (c1 == 0 || c2 == 0) return LogReal::zero();
    const long m = alpha_m(n, k, l);
    if (m < 1) return LogReal::zero();
    const double lm = lchoose(n, k) + lchoose(k, k1) +
                      std::log(static_cast<double>(k1)) +
                      std::log(static_cast<double>(k2)) +
                      LogReal::from_integer(c1).logmag +
                      LogReal::from_integer(c2).logmag + lbeta_weight(n, k, l);
    return LogReal::from_log(lm);
}

double tail_count_log(long k, int l) {
    if (l < 0) throw std::invalid_argument("tail_count_log: l >= 0 required");
    const double kd = static_cast<double>(k);
    const double head = std::log(0.5 * std::sqrt(3.0 / M_PI));
    if (l == 0) return head + (kd - 0.5) * std::log(kd);
    return head + (l / 2.0) * (1.0 - std::log(12.0 * l)) +
           (kd + 1.5 * l - 0.5) * std::log(kd);
}

long omega_cutoff(long n, int l) {
    if (l < 1 || l >= n)
        throw std::invalid_argument("omega_cutoff: 1 <= l < n required");
    return static_cast<long>(
        std::ceil(l / 10.0 * std::log(static_cast<double>(n) / l)));
}

double expected_Y(const ExcessTable& table, long n, int l, long seam) {
    if (l < 0) throw std::invalid_argument("expected_Y: l >= 0 required");
    const long kc = exact_ceiling(table, l, seam);
    LogReal sum = LogReal::zero();
    for (long k = 1; k <= n; ++k) {
        const LogReal count =
            (k <= kc) ? LogReal::from_integer(table.count(static_cast<int>(k), l))
                      : LogReal::from_log(tail_count_log(k, l));
        sum = sum + alpha_log(n, k, l, count);
    }
    return sum.to_double();
}

double expected_Z(const ExcessTable& table, long n, int l, long seam) {
    if (l < 0) throw std::invalid_argument("expected_Z: l >= 0 required");
    long kc = exact_ceiling(table, l, seam);
    if (l == 0) {
        if (n > kc)
            throw std::invalid_argument(
                "expected_Z: no tail model at l = 0; table must cover k = n");
        kc = n;
    }
    LogReal sum = LogReal::zero();
    for (long k = 1; k <= n; ++k) {
        LogReal cp;
        if (k <= kc) {
            cp = LogReal::from_integer(
                bridge_count_exact(table, static_cast<int>(k), l));
        } else {
            cp = LogReal::from_log(2.0 * std::log(static_cast<double>(k)) -
                                   std::log(6.0 * l) + tail_count_log(k, l));
        }
        if (cp.sign == 0) continue;
        const long m = alpha_m(n, k, l);
        if (m < 1) continue;
        sum = sum + LogReal::from_log(lchoose(n, k) + cp.logmag +
                                      lbeta_weight(n, k, l));
    }
    return sum.to_double();
}

double expected_V(const ExcessTable& table, long n, int l, long seam) {
    if (l < 1) throw std::invalid_argument("expected_V: l >= 1 required");
    const long kc = exact_ceiling(table, l - 1, seam);
    LogReal sum = LogReal::zero();
    for (long k = 1; k <= n; ++k) {
        const LogReal count =
            (k <= kc)
                ? LogReal::from_integer(table.count(static_cast<int>(k), l - 1))
                : LogReal::from_log(tail_count_log(k, l - 1));
        LogReal a = alpha_log(n, k, l - 1, count);
        if (a.sign == 0) continue;
        sum = sum + LogReal::from_log(a.logmag +
                                      std::log(static_cast<double>(k)));
    }
    return sum.to_double();
}

double alpha_head_share(const ExcessTable& table, long n, int l, long seam) {
    const long om = omega_cutoff(n, l);
    const long kc = exact_ceiling(table, l, seam);
    LogReal head = LogReal::zero(), total = LogReal::zero();
    for (long k = 1; k <= n; ++k) {
        const LogReal count =
            (k <= kc) ? LogReal::from_integer(table.count(static_cast<int>(k), l))
                      : LogReal::from_log(tail_count_log(k, l));
        const LogReal a = alpha_log(n, k, l, count);
        total = total + a;
        if (k < om) head = head + a;
    }
    if (total.sign == 0) return 0.0;
    return (head / total).to_double();
}

ExpectationReport expectation_report(const ExcessTable& table, long n, int l,
                                     long seam) {
    if (l < 1)
        throw std::invalid_argument("expectation_report: l >= 1 required");
    ExpectationReport rep;
    rep.n = n;
    rep.ell = l;
    rep.E_Y = expected_Y(table, n, l, seam);
    rep.E_Z = expected_Z(table, n, l, seam);
    rep.E_V = expected_V(table, n, l, seam);
    rep.V_formula_ratio =
        rep.E_V / (std::cbrt(12.0 * l) *
                   std::pow(static_cast<double>(n), 2.0 / 3.0));
    rep.cutoff_used = omega_cutoff(n, l);
    rep.exact_k_ceiling = exact_ceiling(table, l, seam);
    rep.tail_model =
        (n <= rep.exact_k_ceiling) ? "exact" : "hybrid-asymptotic";
    return rep;
}

Rational expected_Y_exact(const ExcessTable& table, long n, int l) {
    if (n > table.k_max())
        throw std::invalid_argument("expected_Y_exact: table too small");
    Rational sum(0);
    for (long k = 1; k <= n; ++k)
        sum += alpha_exact(n, k, l, table.count(static_cast<int>(k), l));
    return sum;
}

}  // namespace excesslab
