#pragma once

#include "../numerics/gamma.hpp"
#include "gamma_monomial.hpp"

namespace gamma_periods::monomial {

// Numeric value with the principal branch (2 pi i)^r = (2 pi)^r e^{i pi r / 2}.
inline numerics::Complex evaluate(const GammaMonomial& x, long digits) {
    using namespace numerics;
    const Bits prec = bits_for_digits(digits + 10);
    const Real r(x.two_pi_i_power(), prec);
    const Real two_pi = pi(prec) * 2;
    Real modulus = pow(two_pi, r);
    for (long a = 1; a < x.modulus(); ++a) {
        const Rational& e = x.exponent(a);
        if (e == 0) continue;
        Real g = gamma_hp(exact::make_rational(a, x.modulus()), digits + 10);
        modulus *= pow(g, Real(e, prec));
    }
    Complex value = expi(pi(prec) * r / 2) * modulus;
    return {value.re.with_prec(bits_for_digits(digits)), value.im.with_prec(bits_for_digits(digits))};
}

} // namespace gamma_periods::monomial
