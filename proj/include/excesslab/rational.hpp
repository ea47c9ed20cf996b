#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace excesslab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// num/den in lowest terms. The two-argument mpq_class constructor does
/// not reduce, so every computed quotient must go through here.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact division; throws if the division leaves a remainder.
inline Integer divexact(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("divexact: nonzero remainder");
    return q;
}

/// Converts a rational known to be an integer; throws otherwise.
inline Integer to_integer(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("to_integer: not an integer");
    return c.get_num();
}

}  // namespace excesslab
