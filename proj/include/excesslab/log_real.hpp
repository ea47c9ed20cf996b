#pragma once

#include <cmath>
#include <limits>

#include "excesslab/rational.hpp"

namespace excesslab {

/// Signed real stored as sign + natural log of the magnitude, for
/// factorial-scale quantities that overflow double. Multiplication adds
/// logs; addition goes through log-sum-exp.
struct LogReal {
    int sign = 0;          // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();

    static LogReal zero() { return {}; }

    static LogReal from_log(double lm, int s = +1) { return {s, lm}; }

    static LogReal from_double(double x) {
        if (x == 0.0) return {};
        return {x > 0 ? +1 : -1, std::log(std::fabs(x))};
    }

    static LogReal from_integer(const Integer& z) {
        const int s = sgn(z);
        if (s == 0) return {};
        long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
        return {s, std::log(std::fabs(mant)) + static_cast<double>(exp2) * M_LN2};
    }

    static LogReal from_rational(const Rational& q) {
        LogReal num = from_integer(q.get_num());
        LogReal den = from_integer(q.get_den());
        return num / den;
    }

    double to_double() const {
        return sign == 0 ? 0.0 : sign * std::exp(logmag);
    }

    friend LogReal operator*(const LogReal& a, const LogReal& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.logmag + b.logmag};
    }

    friend LogReal operator/(const LogReal& a, const LogReal& b) {
        if (b.sign == 0) throw std::domain_error("LogReal: division by zero");
        if (a.sign == 0) return {};
        return {a.sign * b.sign, a.logmag - b.logmag};
    }

    friend LogReal operator+(const LogReal& a, const LogReal& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogReal& hi = (a.logmag >= b.logmag) ? a : b;
        const LogReal& lo = (a.logmag >= b.logmag) ? b : a;
        const double d = lo.logmag - hi.logmag;  // <= 0
        if (hi.sign == lo.sign)
            return {hi.sign, hi.logmag + std::log1p(std::exp(d))};
        const double e = std::exp(d);
        if (e == 1.0) return {};
        return {hi.sign, hi.logmag + std::log1p(-e)};
    }

    friend LogReal operator-(const LogReal& a, const LogReal& b) {
        return a + LogReal{-b.sign, b.logmag};
    }
};

}  // namespace excesslab
