#pragma once

#include <vector>

#include "excesslab/rational.hpp"

namespace excesslab {

/// Truncated power series in z with exact rational coefficients.
/// A series of order n holds coefficients of z^0 .. z^n; every ring
/// operation truncates at the common order. Values are immutable in
/// spirit: operations return fresh series.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(order + 1) {}
    PowerSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const { return coeffs_.at(i); }
    Rational& coeff(int i) { return coeffs_.at(i); }

    static PowerSeries constant(int order, const Rational& c);

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(const Rational& c) const;

    /// exp of a series with zero constant term, by the coefficient
    /// recurrence n*b_n = sum_{j=1..n} j*a_j*b_{n-j}.
    PowerSeries exp() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    PowerSeries pow(unsigned e) const;

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// EGF of rooted labelled trees, T = z*exp(T): coefficient of z^n is
/// n^{n-1}/n!.
PowerSeries tree_series(int n_max);

/// (1 - T)^{-y} for integer y >= 1; T must have zero constant term.
PowerSeries series_geom_inv_pow(const PowerSeries& t, unsigned y);

/// t_{a,n}(y) = n! [z^n] T^a / (1-T)^y, exact. Computed by Lagrange
/// inversion as a single finite integer sum, so it stays fast at
/// n in the thousands where the series route would be quadratic in
/// huge rationals. Asserts the result is a non-negative integer.
Integer tree_polynomial(unsigned a, unsigned n, unsigned y);

/// Same quantity through the series route (exp-free convolutions);
/// the independent slow path used to cross-check tree_polynomial.
Integer tree_polynomial_series(unsigned a, unsigned n, unsigned y);

}  // namespace excesslab
