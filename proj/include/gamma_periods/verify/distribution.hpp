#pragma once

#include "../exact/residue.hpp"
#include "../numerics/gamma.hpp"
#include "report.hpp"

namespace gamma_periods::verify {

// Gamma(s) = (2 pi)^{(1-d)/2} d^{s-1/2} prod_{k=0}^{d-1} Gamma((s+k)/d).
inline VerificationReport verify_distribution(long d, const Rational& s, long digits) {
    exact::require_modulus(d);
    if (s <= 0 || s >= 1) throw Error(ErrorKind::invalid_argument, "distribution needs s in (0,1)");
    Stopwatch clock;
    using namespace numerics;
    VerificationReport r;
    r.identity = "gamma-distribution";
    r.parameters = Json{{"d", d}, {"s", exact::to_fraction_string(s)}, {"digits", digits}};
    r.digits = digits;
    r.details["formula"] = "Gamma(s) = (2 pi)^((1-d)/2) d^(s-1/2) prod_{k=0}^{d-1} Gamma((s+k)/d)";
    const Bits prec = bits_for_digits(digits + 10);
    const long work = digits + 5;
    r.lhs = Complex(gamma_hp(s, work));
    Real product = pow(pi(prec) * 2, Real(exact::make_rational(1 - d, 2), prec)) *
                   pow(Real(d, prec), Real(s - Rational(1, 2), prec));
    for (long k = 0; k < d; ++k) product *= gamma_hp(Rational((s + k) / d), work);
    r.rhs = Complex(product);
    r.ratio = *r.lhs / *r.rhs;
    judge_unit_ratio(r);
    r.runtime_seconds = clock.seconds();
    return r;
}

} // namespace gamma_periods::verify
