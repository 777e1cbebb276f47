#pragma once

#include <vector>

#include "complex.hpp"

namespace gamma_periods::numerics {

// B_0, B_2, B_4, ... (count entries), Akiyama-Tanigawa.
inline std::vector<Rational> bernoulli_even(std::size_t count) {
    const std::size_t n_max = 2 * count;
    std::vector<Rational> a(n_max + 1);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t m = 0; m <= n_max; ++m) {
        a[m] = exact::make_rational(Integer(1), Integer(static_cast<unsigned long>(m + 1)));
        for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(Integer(static_cast<unsigned long>(j))) * (a[j - 1] - a[j]);
        if (m % 2 == 0) out.push_back(a[0]);
        if (out.size() == count) break;
    }
    return out;
}

namespace detail {

inline const std::vector<Rational>& bernoulli_cache() {
    static const std::vector<Rational> table = bernoulli_even(128);
    return table;
}

// Stirling series for log Gamma(w), |w| large.
inline Complex log_gamma_stirling(const Complex& w, long digits) {
    const Bits prec = w.prec();
    const Real half_log_2pi = log(pi(prec) * 2) / 2;
    Complex result = log(w) * (w - Real(Rational(1, 2), prec)) - w + half_log_2pi;
    const Real tol = pow10(-(digits + 10), prec);
    const Complex w2 = w * w;
    Complex wpow = Complex(1L, prec) / w; // w^{-(2k-1)}
    std::vector<Rational> local;
    const std::vector<Rational>* table = &bernoulli_cache();
    for (std::size_t k = 1;; ++k) {
        if (k >= table->size()) {
            if (k > 4096) throw Error(ErrorKind::precision_exhausted, "Stirling series did not converge");
            local = bernoulli_even(2 * table->size());
            table = &local;
        }
        Rational coef = (*table)[k] / Rational(Integer(static_cast<unsigned long>((2 * k) * (2 * k - 1))));
        Complex term = wpow * Real(coef, prec);
        result += term;
        if (abs(term) < tol) break;
        wpow /= w2;
    }
    return result;
}

} // namespace detail

// Gamma function to relative accuracy 10^-digits.
inline Complex gamma_hp(const Complex& z_in, long digits) {
    const Bits out_prec = bits_for_digits(digits);
    const Bits prec = bits_for_digits(digits + 10);
    Complex z{z_in.re.with_prec(prec), z_in.im.with_prec(prec)};
    if (z.im.is_zero() && z.re <= 0L && floor(z.re) == z.re) throw PoleError(z.re.to_long());

    Complex result;
    if (z.re < Real(Rational(1, 2), prec)) {
        Complex one_minus = Complex(1L, prec) - z;
        Complex s = sin(z * pi(prec));
        result = Complex(pi(prec)) / (s * gamma_hp(one_minus, digits + 10));
    } else {
        const long radius = std::max<long>(digits, 20);
        Complex w = z;
        Complex product(1L, prec);
        while (abs(w) < Real(radius, prec)) {
            product *= w;
            w = w + 1L;
        }
        result = exp(detail::log_gamma_stirling(w, digits + 10)) / product;
    }
    return {result.re.with_prec(out_prec), result.im.with_prec(out_prec)};
}

inline Real gamma_hp(const Real& x, long digits) {
    Complex z(x, Real(0L, x.prec()));
    return gamma_hp(z, digits).re;
}

inline Real gamma_hp(const Rational& x, long digits) { return gamma_hp(Real(x, bits_for_digits(digits + 10)), digits); }

} // namespace gamma_periods::numerics
