#include "excesslab/wright.hpp"

#include <cmath>
#include <stdexcept>

namespace excesslab {

WrightConstants::WrightConstants(int l_max, const Rational& c1)
    : l_max_(l_max), b_(l_max + 1), c_(l_max + 1) {
    if (l_max < 1) throw std::invalid_argument("WrightConstants: l_max >= 1");
    b_[1] = Rational(5, 24);
    for (int l = 1; l < l_max; ++l) {
        Rational sum = 0;
        for (int p = 1; p < l; ++p)
            sum += Rational(static_cast<long>(p) * (l - p)) * b_[p] * b_[l - p];
        b_[l + 1] = (Rational(3L * l * (l + 1)) * b_[l] + 3 * sum) /
                    Rational(2L * (l + 1));
    }
    c_[1] = c1;
    for (int l = 1; l < l_max; ++l) {
        Rational sum = 0;
        for (int p = 1; p < l; ++p)
            sum += Rational(static_cast<long>(p) * (3 * l - 3 * p - 1)) * b_[p] *
                   c_[l - p];
        c_[l + 1] = (Rational(8L * (l + 1)) * b_[l + 1] + Rational(3L * l) * b_[l] +
                     Rational(static_cast<long>(3 * l + 2) * (3 * l - 1)) * c_[l] +
                     6 * sum) /
                    Rational(2L * (3 * l + 2));
    }
}

double WrightConstants::d(int l) const {
    // d_l = b_l / ((3/2)^l (l-1)!) = b_l * 2^l / (3^l (l-1)!)
    Rational r = b_.at(l) * ratio(Integer(1) << l, ipow(3, l) * factorial(l - 1));
    return r.get_d();
}

BasisDecomposition::BasisDecomposition(const ExcessTable& table, int l, int order)
    : ell_(l) {
    if (l < 1) throw std::invalid_argument("BasisDecomposition: l >= 1");
    if (order < 3 * l + 3)
        throw std::invalid_argument("BasisDecomposition: order >= 3l+3 required");

    PowerSeries t = tree_series(order);
    PowerSeries w(order);
    for (int n = 1; n <= order; ++n)
        w.coeff(n) = ratio(table.count(n, l), factorial(n));

    // U = W_l (1-T)^{3l} must be a polynomial Q in T of degree 3l+2.
    PowerSeries u = w * (PowerSeries::constant(order, 1) - t).pow(3 * l);

    std::vector<Rational> q;
    PowerSeries tp = PowerSeries::constant(order, 1);
    PowerSeries res = u;
    for (int m = 0; m <= order; ++m) {
        const Rational qm = res.coeff(m);
        q.push_back(qm);
        if (qm != 0) res = res - tp.scaled(qm);
        if (m < order) tp = tp * t;
    }
    int deg = 0;
    for (int m = 0; m <= order; ++m)
        if (q[m] != 0) deg = m;
    if (deg > 3 * l + 2)
        throw std::logic_error(
            "BasisDecomposition: residual beyond degree 3l+2 (wrong W_l?)");

    // P(u) = Q(1-u); omega(3l - j) = coefficient of u^j.
    std::vector<Rational> p(deg + 1);
    for (int m = 0; m <= deg; ++m) {
        if (q[m] == 0) continue;
        Rational term = q[m];
        for (int j = 0; j <= m; ++j) {
            p[j] += term * binomial(m, j) * ((j % 2) ? -1 : 1);
        }
    }
    s_min_ = 3 * l - deg;
    omega_.assign(deg + 1, Rational(0));
    for (int j = 0; j <= deg; ++j) omega_[deg - j] = p[j];  // index s - s_min
}

const Rational& BasisDecomposition::omega(int s) const {
    static const Rational zero(0);
    if (s < s_min_ || s > s_max()) return zero;
    return omega_[s - s_min_];
}

bool BasisDecomposition::reconstructs(const ExcessTable& table, int order) const {
    PowerSeries t = tree_series(order);
    PowerSeries one = PowerSeries::constant(order, 1);
    PowerSeries inv = (one - t).inverse();
    PowerSeries acc(order);
    // powers of (1-T): negative s means (1-T)^{|s|}
    for (int s = s_min_; s <= s_max(); ++s) {
        const Rational& om = omega(s);
        if (om == 0) continue;
        PowerSeries basis =
            (s >= 0) ? inv.pow(static_cast<unsigned>(s))
                     : (one - t).pow(static_cast<unsigned>(-s));
        acc = acc + basis.scaled(om);
    }
    for (int n = 0; n <= order; ++n) {
        Rational expected =
            (n >= 1) ? ratio(table.count(n, ell_), factorial(n)) : Rational(0);
        if (acc.coeff(n) != expected) return false;
    }
    return true;
}

Rational wright_c1(const ExcessTable& table) {
    BasisDecomposition d(table, 1, 8);
    return -d.omega(2);
}

}  // namespace excesslab
