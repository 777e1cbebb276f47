#pragma once

#include "../numerics/gamma.hpp"
#include "../numerics/quadrature.hpp"
#include "report.hpp"

namespace gamma_periods::verify {

// Beta integral against Gamma(a)Gamma(b)/Gamma(a+b).
inline VerificationReport verify_euler(const Rational& a, const Rational& b, long digits) {
    if (a <= 0 || a >= 1 || b <= 0 || b >= 1)
        throw Error(ErrorKind::invalid_argument, "euler needs a, b in (0,1)");
    Stopwatch clock;
    using namespace numerics;
    VerificationReport r;
    r.identity = "euler-beta";
    r.parameters = Json{{"a", exact::to_fraction_string(a)}, {"b", exact::to_fraction_string(b)}, {"digits", digits}};
    r.digits = digits;
    const Bits prec = bits_for_digits(digits + 10);
    auto one = [&](const Real&) { return Complex(Real(1L, prec)); };
    r.lhs = integrate_singular(one, Real(0L, prec), Real(1L, prec), a - 1, b - 1, digits + 5);
    r.rhs = Complex(gamma_hp(a, digits + 5) * gamma_hp(b, digits + 5) / gamma_hp(Rational(a + b), digits + 5));
    r.ratio = *r.lhs / *r.rhs;
    judge_unit_ratio(r);
    r.runtime_seconds = clock.seconds();
    return r;
}

} // namespace gamma_periods::verify
