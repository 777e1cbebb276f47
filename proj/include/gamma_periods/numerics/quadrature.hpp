#pragma once

#include <functional>
#include <vector>

#include "complex.hpp"

namespace gamma_periods::numerics {

// Quadrature node with the distances to both ends computed without cancellation.
struct Node {
    Real t;
    Real from_lo; // t - lo
    Real to_hi;   // hi - t
};

struct QuadratureResult {
    Complex value;
    Real error_estimate;
    int levels = 0;
    long evaluations = 0;
};

struct QuadratureOptions {
    int max_levels = 12;
    double max_u = 12.0;
};

// Tanh-sinh quadrature on [lo, hi]; the integrand may be singular (integrably) at the ends.
// Halves the step until two successive levels agree to 10^-digits relative to the L1 scale.
template <class F>
QuadratureResult integrate_tanh_sinh(F&& f, const Real& lo_in, const Real& hi_in, long digits,
                                     QuadratureOptions options = {}) {
    const Bits prec = bits_for_digits(digits + 10);
    const Real lo = lo_in.with_prec(prec), hi = hi_in.with_prec(prec);
    const Real half = (hi - lo) / 2;
    const Real mid = (hi + lo) / 2;
    const Real half_pi = pi(prec) / 2;
    const Real negligible = pow10(-(digits + 8), prec);

    QuadratureResult out;
    // Weighted contributions of the node pair at +u and -u.
    auto contribution = [&](const Real& u, Real& magnitude) {
        Real s = half_pi * sinh(u);
        Real ch = cosh(s);
        Real w = half * half_pi * cosh(u) / (ch * ch);
        Real es = exp(s);
        Real near = half / (es * ch); // distance to the nearer end
        Real far = half * es / ch;
        Node right{hi - near, far, near};
        Node left{lo + near, near, far};
        Complex a = f(right);
        Complex b = f(left);
        out.evaluations += 2;
        magnitude = (abs(a) + abs(b)) * w;
        return (a + b) * w;
    };

    // Level 0: step 1/2, walk outward until contributions are negligible.
    Real h = Real(Rational(1, 2), prec);
    Complex sum;
    Real l1(0L, prec);
    {
        Node centre{mid, half, half};
        Complex c = f(centre) * (half * half_pi);
        ++out.evaluations;
        sum = c;
        l1 = abs(c);
    }
    long k_max = 0;
    int small_run = 0;
    for (long k = 1; static_cast<double>(k) * 0.5 <= options.max_u; ++k) {
        Real mag;
        Complex c = contribution(h * k, mag);
        sum += c;
        l1 += mag;
        k_max = k;
        if (mag < negligible * l1) {
            if (++small_run >= 2) break;
        } else {
            small_run = 0;
        }
    }
    const Real u_max = h * k_max;

    Complex previous = sum * h;
    const Real tol = pow10(-digits, prec);
    for (int level = 1; level <= options.max_levels; ++level) {
        h = h / 2;
        for (long j = 1;; j += 2) {
            Real u = h * j;
            if (u > u_max) break;
            Real mag;
            sum += contribution(u, mag);
            l1 += mag;
        }
        Complex current = sum * h;
        Real diff = abs(current - previous);
        Real scale = l1 * h;
        out.levels = level;
        out.error_estimate = diff;
        if (level >= 3 && diff <= tol * scale) {
            out.value = current;
            return out;
        }
        previous = current;
    }
    throw Error(ErrorKind::quadrature_failure,
                "tanh-sinh did not converge; last level difference " + out.error_estimate.to_string(6));
}

// Integral of (t-lo)^mu_lo (hi-t)^mu_hi g(t) over [lo, hi], mu in (-1, 0].
template <class G>
Complex integrate_singular(G&& g, const Real& lo, const Real& hi, const Rational& mu_lo, const Rational& mu_hi,
                           long digits) {
    for (const auto* mu : {&mu_lo, &mu_hi})
        if (*mu <= -1 || *mu > 0)
            throw Error(ErrorKind::invalid_argument, "endpoint exponent " + exact::to_fraction_string(*mu) +
                                                         " outside (-1, 0]");
    if (!(lo < hi)) throw Error(ErrorKind::invalid_argument, "empty integration interval");
    const Bits prec = bits_for_digits(digits + 10);
    const Real a(mu_lo, prec), b(mu_hi, prec);
    auto integrand = [&](const Node& n) {
        Real weight = Real(1L, prec);
        if (mu_lo != 0) weight = weight * pow(n.from_lo, a);
        if (mu_hi != 0) weight = weight * pow(n.to_hi, b);
        return Complex(g(n.t)) * weight;
    };
    return integrate_tanh_sinh(integrand, lo, hi, digits).value;
}

} // namespace gamma_periods::numerics
