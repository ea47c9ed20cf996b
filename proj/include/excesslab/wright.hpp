#pragma once

#include <vector>

#include "excesslab/excess_table.hpp"
#include "excesslab/power_series.hpp"
#include "excesslab/rational.hpp"

namespace excesslab {

/// Wright constants b_l, c_l (exact rationals) and the derived reals
/// d_l = b_l / ((3/2)^l (l-1)!), an increasing sequence with limit
/// 1/(2 pi). b follows the recurrence
///   2(l+1) b_{l+1} = 3l(l+1) b_l + 3 sum_{p=1}^{l-1} p(l-p) b_p b_{l-p}
/// with b_1 = 5/24, and c follows
///   2(3l+2) c_{l+1} = 8(l+1) b_{l+1} + 3l b_l + (3l+2)(3l-1) c_l
///                     + 6 sum_{p=1}^{l-1} p(3l-3p-1) b_p c_{l-p}
/// seeded with a caller-supplied c_1 (extracted from the basis
/// decomposition of W_1; see wright_c1).
class WrightConstants {
public:
    WrightConstants(int l_max, const Rational& c1);

    int l_max() const { return l_max_; }
    const Rational& b(int l) const { return b_.at(l); }
    const Rational& c(int l) const { return c_.at(l); }
    double d(int l) const;

private:
    int l_max_;
    std::vector<Rational> b_;  // index 1..l_max
    std::vector<Rational> c_;
};

/// Exact expansion of W_l (the excess-l EGF, coefficients c(n,n+l)/n!)
/// in powers of 1/(1-T): W_l = sum_s omega(s) (1-T)^{-s}. The leading
/// power is s = 3l with omega(3l) = b_l and omega(3l-1) = -c_l; the
/// expansion also carries nonpositive powers (a polynomial part in
/// (1-T)) down to s = -2, which are required for exact equality.
class BasisDecomposition {
public:
    /// Extracts the decomposition from the exact series of W_l, using
    /// table counts c(n,n+l) for n <= order. Requires order >= 3l+3
    /// so that the polynomial extraction is overdetermined; every
    /// residual coefficient through the working order must vanish
    /// exactly, or this throws.
    BasisDecomposition(const ExcessTable& table, int l, int order);

    int ell() const { return ell_; }
    int s_min() const { return s_min_; }
    int s_max() const { return 3 * ell_; }
    const Rational& omega(int s) const;

    /// Rebuilds the series from the omega coefficients and compares it
    /// against W_l up to the given order; exact equality required.
    bool reconstructs(const ExcessTable& table, int order) const;

private:
    int ell_;
    int s_min_;
    std::vector<Rational> omega_;  // omega_[i] is omega(s_min + i)
};

/// c_1 = -omega(2) of the W_1 decomposition; pins the base value the
/// c-recurrence needs.
Rational wright_c1(const ExcessTable& table);

}  // namespace excesslab
