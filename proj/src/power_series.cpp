#include "excesslab/power_series.hpp"

#include <stdexcept>
#include <utility>

namespace excesslab {

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order + 1)
        throw std::invalid_argument("PowerSeries: coefficient count != order+1");
}

PowerSeries PowerSeries::constant(int order, const Rational& c) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

static void check_orders(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("PowerSeries: order mismatch");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    check_orders(*this, o);
    PowerSeries r(order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    check_orders(*this, o);
    PowerSeries r(order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    check_orders(*this, o);
    const int n = order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries r(order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

PowerSeries PowerSeries::exp() const {
    if (coeffs_[0] != 0)
        throw std::invalid_argument("PowerSeries::exp: nonzero constant term");
    const int n = order();
    PowerSeries b(n);
    b.coeffs_[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += Rational(j) * coeffs_[j] * b.coeffs_[m - j];
        b.coeffs_[m] = acc / m;
    }
    return b;
}

PowerSeries PowerSeries::inverse() const {
    if (coeffs_[0] == 0)
        throw std::invalid_argument("PowerSeries::inverse: zero constant term");
    const int n = order();
    PowerSeries c(n);
    c.coeffs_[0] = 1 / coeffs_[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int j = 1; j <= m; ++j) acc += coeffs_[j] * c.coeffs_[m - j];
        c.coeffs_[m] = -acc / coeffs_[0];
    }
    return c;
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries r = constant(order(), 1);
    PowerSeries base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

PowerSeries tree_series(int n_max) {
    PowerSeries t(n_max);
    for (int n = 1; n <= n_max; ++n)
        t.coeff(n) = ratio(ipow(n, n - 1), factorial(n));
    return t;
}

PowerSeries series_geom_inv_pow(const PowerSeries& t, unsigned y) {
    if (y < 1) throw std::invalid_argument("series_geom_inv_pow: y must be >= 1");
    if (t.coeff(0) != 0)
        throw std::invalid_argument("series_geom_inv_pow: nonzero constant term in T");
    PowerSeries one_minus_t = PowerSeries::constant(t.order(), 1) - t;
    return one_minus_t.inverse().pow(y);
}

Integer tree_polynomial(unsigned a, unsigned n, unsigned y) {
    if (n < 1) throw std::invalid_argument("tree_polynomial: n must be >= 1");
    if (a + y < 1) throw std::invalid_argument("tree_polynomial: a+y must be >= 1");
    // n! [z^n] F(T(z)) = (n-1)! [t^{n-1}] F'(t) e^{nt} with F = t^a (1-t)^{-y}.
    // F' = a t^{a-1} (1-t)^{-y} + y t^a (1-t)^{-y-1}; both pieces expand into
    // finite sums of binomial(y-1+i, i) * n^m / m! terms.
    Integer total = 0;
    auto accumulate = [&](unsigned coeff, unsigned shift, unsigned yy) {
        // coeff * sum_{i=0}^{n-shift} C(yy-1+i, i) * n^{n-shift-i} * (n-1)!/(n-shift-i)!
        if (coeff == 0 || shift > n) return;
        const long imax = static_cast<long>(n - shift);
        // walk i downward: npow grows by *n, the falling-factorial ratio by *j.
        Integer npow = 1;                  // n^{n-shift-i}, starts at i = imax -> n^0
        Integer binom = binomial(yy - 1 + imax, imax);
        Integer fall = factorial(n - 1);   // (n-1)!/j! with j = n-shift-i
        // at i = imax, j = 0 -> fall = (n-1)!
        Integer term_sum = 0;
        for (long i = imax; i >= 0; --i) {
            term_sum += binom * npow * fall;
            if (i > 0) {
                // move to i-1: j increases by 1
                const long j_next = static_cast<long>(n - shift) - (i - 1);
                fall = divexact(fall, Integer(j_next));
                npow *= n;
                // C(yy-1+i-1, i-1) = C(yy-1+i, i) * i / (yy-1+i)
                binom = divexact(binom * Integer(i), Integer(yy - 1 + i));
            }
        }
        total += coeff * term_sum;
    };
    if (a > 0) accumulate(a, a, y);
    accumulate(y, a + 1, y + 1);
    if (total < 0) throw std::logic_error("tree_polynomial: negative result");
    return total;
}

Integer tree_polynomial_series(unsigned a, unsigned n, unsigned y) {
    PowerSeries t = tree_series(static_cast<int>(n));
    PowerSeries s = series_geom_inv_pow(t, y);
    if (a > 0) s = s * t.pow(a);
    return to_integer(s.coeff(static_cast<int>(n)) * factorial(n));
}

}  // namespace excesslab
