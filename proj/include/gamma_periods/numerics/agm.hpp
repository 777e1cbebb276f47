#pragma once

#include "complex.hpp"

namespace gamma_periods::numerics {

// Arithmetic-geometric mean with principal square roots.
inline Complex agm(const Complex& a_in, const Complex& b_in, long digits) {
    if (a_in.is_zero() || b_in.is_zero()) throw Error(ErrorKind::invalid_argument, "agm of zero");
    const Bits prec = bits_for_digits(digits + 10);
    Complex a{a_in.re.with_prec(prec), a_in.im.with_prec(prec)};
    Complex b{b_in.re.with_prec(prec), b_in.im.with_prec(prec)};
    const Real tol = pow10(-(digits + 5), prec);
    for (int iter = 0; iter < 10000; ++iter) {
        if (abs(a - b) <= tol * abs(a)) break;
        Complex next_a = (a + b) / 2L;
        b = sqrt(a * b);
        a = next_a;
    }
    return {a.re.with_prec(bits_for_digits(digits)), a.im.with_prec(bits_for_digits(digits))};
}

inline Real agm(const Real& a, const Real& b, long digits) {
    return agm(Complex(a), Complex(b), digits).re;
}

} // namespace gamma_periods::numerics
