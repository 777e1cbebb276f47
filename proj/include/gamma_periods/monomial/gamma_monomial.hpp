#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsilon.hpp"

namespace gamma_periods::monomial {

// (2 pi i)^r * prod_{a=1}^{d-1} Gamma(a/d)^{e(a)}, a class modulo nonzero algebraic numbers.
class GammaMonomial {
public:
    explicit GammaMonomial(long d) : d_(d), e_((exact::require_modulus(d), static_cast<std::size_t>(d))) {}
    GammaMonomial(long d, Rational r, const std::map<long, Rational>& e) : GammaMonomial(d) {
        r_ = std::move(r);
        for (auto& [a, x] : e) exponent(a) = x;
    }

    long modulus() const { return d_; }
    const Rational& two_pi_i_power() const { return r_; }
    Rational& two_pi_i_power() { return r_; }

    const Rational& exponent(long a) const { return e_[check(a)]; }
    Rational& exponent(long a) { return e_[check(a)]; }

    bool is_identity() const {
        if (r_ != 0) return false;
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const GammaMonomial&) const = default;

private:
    std::size_t check(long a) const {
        if (a < 1 || a >= d_)
            throw Error(ErrorKind::invalid_argument, "gamma exponent index " + std::to_string(a) + " outside 1.." +
                                                         std::to_string(d_ - 1));
        return static_cast<std::size_t>(a);
    }

    long d_;
    Rational r_;
    std::vector<Rational> e_; // index 0 unused
};

// x * y^k
inline GammaMonomial monomial_combine(const GammaMonomial& x, const GammaMonomial& y, const Rational& k) {
    if (x.modulus() != y.modulus())
        throw Error(ErrorKind::incompatible_moduli, "monomials with moduli " + std::to_string(x.modulus()) + " and " +
                                                        std::to_string(y.modulus()));
    GammaMonomial out = x;
    out.two_pi_i_power() += k * y.two_pi_i_power();
    for (long a = 1; a < x.modulus(); ++a) out.exponent(a) += k * y.exponent(a);
    return out;
}

inline GammaMonomial monomial_inverse(const GammaMonomial& x) {
    return monomial_combine(GammaMonomial(x.modulus()), x, -1);
}

// prod_a Gamma(1 - a/d)^{eps(a / lambda)}
inline GammaMonomial gd_prediction(const ExponentFunction& eps, long lambda) {
    const long d = eps.modulus();
    const long inv = exact::mod_inverse(lambda, d);
    GammaMonomial out(d);
    for (long a = 1; a < d; ++a) out.exponent(d - a) += eps[exact::rep(a * inv, d)];
    return out;
}

struct ReductionStep {
    std::string relation; // "reflection", "duplication-at-half" or "distribution"
    long a = 0;           // first gamma argument numerator involved
    long b = 0;           // partner numerator (d - a for reflection, 0 otherwise)
    Rational multiplicity;
    Rational added_power; // contribution to the 2 pi i exponent
};

struct ReducedMonomial {
    GammaMonomial reduced;
    std::vector<ReductionStep> certificate;
};

// Reflection Gamma(x)Gamma(1-x) ~ 2 pi i, then distribution prod_a Gamma(a/d) ~ (2 pi i)^{(d-1)/2}.
inline ReducedMonomial reduce_monomial(const GammaMonomial& x) {
    const long d = x.modulus();
    ReducedMonomial out{x, {}};
    GammaMonomial& m = out.reduced;
    for (long a = 1; 2 * a < d; ++a) {
        Rational k = m.exponent(d - a);
        if (k == 0) continue;
        m.exponent(a) -= k;
        m.exponent(d - a) = 0;
        m.two_pi_i_power() += k;
        out.certificate.push_back({"reflection", a, d - a, k, k});
    }
    if (d % 2 == 0) {
        Rational k = m.exponent(d / 2);
        if (k != 0) {
            Rational added = k / 2;
            m.exponent(d / 2) = 0;
            m.two_pi_i_power() += added;
            out.certificate.push_back({"duplication-at-half", d / 2, d / 2, k, added});
        }
    }
    Rational c = m.exponent(1);
    bool constant = c != 0;
    for (long a = 2; a < d && constant; ++a) constant = m.exponent(a) == c;
    if (constant) {
        Rational added = c * Rational(d - 1) / 2;
        for (long a = 1; a < d; ++a) m.exponent(a) = 0;
        m.two_pi_i_power() += added;
        out.certificate.push_back({"distribution", 1, 0, c, added});
    }
    return out;
}

// Koblitz-Ogus: if c(u) = sum_a e(a) <ua/d> is the same for every unit u, then
// prod Gamma(a/d)^e(a) ~ pi^{sum e / 2}. So (2 pi i)^r prod Gamma(a/d)^e(a) is algebraic
// once c is constant and r + sum e / 2 = 0; both survive the reduction steps unchanged.
// Sufficient only: false means "not certified".
inline bool monomial_is_algebraic(const GammaMonomial& x) {
    auto r = reduce_monomial(x);
    const GammaMonomial& m = r.reduced;
    const long d = x.modulus();
    Rational total;
    for (long a = 1; a < d; ++a) total += m.exponent(a);
    if (m.two_pi_i_power() + total / 2 != 0) return false;
    std::optional<Rational> first;
    for (long u : exact::unit_group(d)) {
        Rational c;
        for (long a = 1; a < d; ++a) c += m.exponent(a) * exact::rep(u * a, d);
        if (!first) first = c;
        else if (c != *first) return false;
    }
    return true;
}

} // namespace gamma_periods::monomial
