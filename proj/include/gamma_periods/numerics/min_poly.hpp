#pragma once

#include <string>
#include <vector>

#include "pslq.hpp"

namespace gamma_periods::numerics {

struct MinimalPolynomial {
    // c_0 + c_1 x + ... + c_n x^n, primitive, c_n > 0.
    std::vector<Integer> coefficients;
    Real residual; // |P(z)| / sum |c_k| |z|^k

    long degree() const { return static_cast<long>(coefficients.size()) - 1; }
};

struct MinPolyResult {
    std::optional<MinimalPolynomial> polynomial;
    std::vector<std::string> warnings;
    long effective_height_digits = 0; // at the last degree tried
};

inline std::string polynomial_to_string(const std::vector<Integer>& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Integer a = abs(c[k]);
        std::string sign = c[k] < 0 ? "-" : "+";
        if (out.empty())
            out = c[k] < 0 ? "-" : "";
        else
            out += " " + sign + " ";
        bool show_coef = a != 1 || k == 0;
        if (show_coef) out += a.get_str();
        if (k >= 1) out += (show_coef ? "*x" : "x");
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

// Smallest-degree integer polynomial vanishing at z, searched by PSLQ on powers of z.
// Complex z is handled through Re(z^k) + e*Im(z^k), with e = exp(1).
inline MinPolyResult min_poly(const Complex& z_in, long max_degree, long height_digits, long digits) {
    if (max_degree < 1) throw Error(ErrorKind::invalid_argument, "max degree must be >= 1");
    MinPolyResult out;
    if (digits < 4 * max_degree * height_digits)
        out.warnings.push_back("digits " + std::to_string(digits) + " below the working rule 4*deg*height = " +
                               std::to_string(4 * max_degree * height_digits) +
                               "; search height was capped to stay sound");
    const Bits prec = bits_for_digits(digits + 10);
    Complex z{z_in.re.with_prec(prec), z_in.im.with_prec(prec)};
    const bool real_input = z.im.is_zero() || z.im.log10_abs() < z.re.log10_abs() - static_cast<double>(digits);
    const Real e = euler_e(prec);

    std::vector<Complex> powers{Complex(1L, prec)};
    for (long k = 1; k <= max_degree; ++k) powers.push_back(powers.back() * z);

    for (long deg = 1; deg <= max_degree; ++deg) {
        long h = std::min<long>(height_digits, static_cast<long>((0.75 * static_cast<double>(digits) - 10.0) /
                                                                  static_cast<double>(deg + 1)));
        out.effective_height_digits = h;
        if (h < 1) {
            out.warnings.push_back("precision too low to search degree " + std::to_string(deg));
            break;
        }
        std::vector<Real> v;
        for (long k = 0; k <= deg; ++k) v.push_back(real_input ? powers[k].re : powers[k].re + e * powers[k].im);
        Integer max_coeff;
        mpz_ui_pow_ui(max_coeff.get_mpz_t(), 10, static_cast<unsigned long>(h));
        auto rel = pslq(v, digits, max_coeff);
        if (!rel) continue;
        std::vector<Integer> c = rel->coefficients;
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        if (!z.is_zero())
            while (c.size() > 1 && c.front() == 0) c.erase(c.begin());
        if (c.size() < 2) continue;
        Integer g = 0;
        for (const auto& ci : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
        for (auto& ci : c) ci /= g;
        if (c.back() < 0)
            for (auto& ci : c) ci = -ci;
        Complex value(0L, prec);
        Real scale(0L, prec);
        for (std::size_t k = 0; k < c.size(); ++k) {
            value += powers[k] * Real(c[k], prec);
            scale += abs(powers[k]) * Real(Integer(abs(c[k])), prec);
        }
        Real residual = abs(value) / scale;
        if (residual.log10_abs() >= -static_cast<double>(digits) / 2) continue;
        out.polynomial = MinimalPolynomial{std::move(c), residual};
        return out;
    }
    return out;
}

} // namespace gamma_periods::numerics
