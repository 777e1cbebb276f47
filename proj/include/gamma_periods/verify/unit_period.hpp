#pragma once

#include "../cover/theorem_b.hpp"
#include "../numerics/period_matrix.hpp"
#include "report.hpp"

namespace gamma_periods::verify {

// Period of the unit object on P^1 minus {0, 1, ..., m-1}: the H^1 periods come from
// loops around 0..m-2 against dt/(t - i) - dt/(t - (m-1)), integrated numerically.
inline VerificationReport verify_unit_period(long m, long digits) {
    if (m < 1) throw Error(ErrorKind::invalid_argument, "unit period needs at least one puncture");
    Stopwatch clock;
    using namespace numerics;
    VerificationReport r;
    r.identity = "unit-period";
    r.parameters = Json{{"punctures", m}, {"digits", digits}};
    r.digits = digits;
    const Bits prec = bits_for_digits(digits + 10);
    const Rational exponent = cover::unit_period_exponent(m);
    r.details["exponent"] = exact::to_fraction_string(exponent);

    const std::size_t k = static_cast<std::size_t>(m - 1);
    const long nodes = 4 * digits + 64; // trapezoid on a circle of radius 1/2: error ~ 2^-nodes
    const Real radius(Rational(1, 2), prec);
    const Real two_pi = pi(prec) * 2;
    const Real last(m - 1, prec);
    std::vector<Complex> periods(k * k);
    for (std::size_t c = 0; c < k; ++c) {
        const Real centre(static_cast<long>(c), prec);
        for (std::size_t f = 0; f < k; ++f) {
            const Real pole(static_cast<long>(f), prec);
            Complex sum(0L, prec);
            for (long n = 0; n < nodes; ++n) {
                Complex w = expi(two_pi * n / nodes) * radius; // z - centre
                Complex z = w + centre;
                Complex form = Complex(1L, prec) / (z - pole) - Complex(1L, prec) / (z - last);
                sum += form * w * Complex(Real(0L, prec), Real(1L, prec));
            }
            periods[c * k + f] = sum * two_pi / nodes;
        }
    }
    Complex det_h1 = determinant(periods, k);
    Complex det_h0(1L, prec); // the constant 1 has period 1
    r.lhs = det_h0 / det_h1;
    Complex two_pi_i{Real(0L, prec), two_pi};
    r.rhs = pow(two_pi_i, exponent.get_num().get_si());
    r.ratio = *r.lhs / *r.rhs;
    judge_algebraic_ratio(r, 1, std::min<long>(10, digits / 4));
    if (r.verdict == Verdict::algebraic_ratio_detected) r.verdict = Verdict::exact_match;
    r.runtime_seconds = clock.seconds();
    return r;
}

} // namespace gamma_periods::verify
