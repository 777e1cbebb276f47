#pragma once

#include <array>

#include "../exact/kronecker.hpp"
#include "../exact/residue.hpp"
#include "../numerics/agm.hpp"
#include "../numerics/gamma.hpp"
#include "../numerics/quadrature.hpp"
#include "report.hpp"

namespace gamma_periods::verify {

struct CMFieldData {
    long discriminant = 0;
    long h = 0;
    long w = 0;
    std::vector<int> chi; // chi[a] for a = 0 .. |D| - 1
    std::vector<std::array<long, 3>> reduced_forms;
};

inline bool is_squarefree(long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

inline bool is_fundamental_discriminant(long D) {
    if (D == 0 || D == 1) return false;
    long r = exact::rep(D, 4);
    if (r == 1) return is_squarefree(D);
    if (r == 0) {
        long m = D / 4;
        long rm = exact::rep(m, 4);
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

// Class number by counting reduced forms (a, b, c), b^2 - 4ac = D.
inline CMFieldData class_number(long D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw Error(ErrorKind::invalid_discriminant, std::to_string(D) + " is not a negative fundamental discriminant");
    CMFieldData out;
    out.discriminant = D;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            long c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            out.reduced_forms.push_back({a, b, c});
        }
    out.h = static_cast<long>(out.reduced_forms.size());
    out.w = D == -3 ? 6 : D == -4 ? 4 : 2;
    for (long a = 0; a < -D; ++a) out.chi.push_back(exact::kronecker_symbol(D, a));
    return out;
}

struct CmPeriod {
    Real period;           // real period via AGM
    Real quadrature;       // same quantity by direct integration
    Real discrepancy;      // relative difference
    long real_roots = 0;
};

// Real period of y^2 = x^3 + a4 x + a6.
inline CmPeriod cm_period(const Rational& a4, const Rational& a6, long digits) {
    using namespace numerics;
    if (4 * a4 * a4 * a4 + 27 * a6 * a6 == 0) throw Error(ErrorKind::invalid_curve, "singular cubic");
    const Bits prec = bits_for_digits(digits + 10);
    const Real A(a4, prec), B(a6, prec);
    auto f = [&](const Real& x) { return x * x * x + A * x + B; };
    auto df = [&](const Real& x) { return x * x * 3 + A; };

    // Bracket the largest real root.
    const Real bound = max(abs(A), abs(B)) + 1L;
    Real lo = -bound, hi = bound;
    if (a4 < 0) {
        Real xc = sqrt(-A / 3);
        if (f(xc) < 0L)
            lo = xc;
        else
            hi = -xc;
    }
    for (int i = 0; i < 80; ++i) {
        Real mid = (lo + hi) / 2;
        if (f(mid) > 0L)
            hi = mid;
        else
            lo = mid;
    }
    Real e1 = (lo + hi) / 2;
    const Real tol = pow10(-(digits + 8), prec);
    for (int i = 0; i < 200; ++i) {
        Real step = f(e1) / df(e1);
        e1 -= step;
        if (abs(step) <= tol * max(abs(e1), Real(1L, prec))) break;
    }
    // Remaining roots solve x^2 + e1 x + (e1^2 + a4).
    const Real c = e1 * e1 + A;
    const Real disc = e1 * e1 - c * 4;
    Complex root = sqrt(Complex(disc));
    Complex e2 = (root - e1) / 2L;
    Complex e3 = (-root - e1) / 2L;
    CmPeriod out;
    out.real_roots = disc.sign() > 0 ? 3 : 1;
    Complex g = agm(sqrt(Complex(e1) - e3), sqrt(Complex(e1) - e2), digits + 5);
    out.period = (pi(prec) * 2 / g).re;

    // Cross-check: x = e1 + u/(1-u) turns 2 * int_{e1}^inf dx/y into a beta-type integral on [0,1].
    auto integrand = [&](const Real& u) {
        Real one_minus = 1L - u;
        Real X = e1 * one_minus + u;
        Real Q = X * X + e1 * X * one_minus + c * one_minus * one_minus;
        return Complex(1L / sqrt(Q));
    };
    out.quadrature = integrate_singular(integrand, Real(0L, prec), Real(1L, prec), Rational(-1, 2), Rational(-1, 2),
                                        digits + 5).re * 2;
    out.discrepancy = abs(out.period - out.quadrature) / abs(out.period);
    if (out.discrepancy.log10_abs() > -static_cast<double>(digits))
        throw Error(ErrorKind::quadrature_failure, "AGM and quadrature periods disagree: " + out.discrepancy.to_string(6));
    out.period = out.period.with_prec(bits_for_digits(digits));
    return out;
}

// sqrt(pi) * prod_a Gamma(a/|D|)^{w chi(a) / (4h)}
inline Real chowla_selberg_value(const CMFieldData& field, long digits) {
    using namespace numerics;
    const Bits prec = bits_for_digits(digits + 10);
    const long n = -field.discriminant;
    Real value = sqrt(pi(prec));
    for (long a = 1; a < n; ++a) {
        if (field.chi[a] == 0) continue;
        Rational e = exact::make_rational(field.w * field.chi[a], 4 * field.h);
        value *= pow(gamma_hp(exact::make_rational(a, n), digits + 5), Real(e, prec));
    }
    return value;
}

inline VerificationReport verify_lcs(long discriminant, const Real& curve_period, long digits, long pslq_degree,
                                     long pslq_height = 20) {
    Stopwatch clock;
    auto field = class_number(discriminant);
    VerificationReport r;
    r.identity = "lerch-chowla-selberg";
    r.digits = digits;
    r.parameters = Json{{"discriminant", discriminant}, {"curve_period", curve_period.to_string(digits)}, {"digits", digits}};
    r.details["class_number"] = field.h;
    r.details["roots_of_unity"] = field.w;
    Json forms = Json::array();
    for (auto& f : field.reduced_forms) forms.push_back(f);
    r.details["reduced_forms"] = forms;
    r.lhs = Complex(curve_period);
    r.rhs = Complex(chowla_selberg_value(field, digits));
    r.ratio = *r.lhs / *r.rhs;
    judge_algebraic_ratio(r, pslq_degree, pslq_height);
    r.runtime_seconds = clock.seconds();
    return r;
}

} // namespace gamma_periods::verify
