#pragma once

#include "../monomial/gamma_monomial.hpp"
#include "eigen.hpp"

namespace gamma_periods::cover {

// Exponent E with per(1_U) ~ (2 pi i)^E for U = P^1 minus m points, from the
// stratification sum (1/2) sum_k (-1)^k (1 + k) chi(D(k)) with D(0) = P^1, D(1) = the m points.
inline Rational unit_period_exponent(long m) {
    if (m < 0) throw Error(ErrorKind::invalid_argument, "number of punctures must be >= 0");
    const long dimension = 1;
    const long stratum_chi[2] = {2, m};
    Rational sum;
    for (long k = 0; k <= dimension; ++k) sum += Rational((k % 2 == 0 ? 1 : -1) * (dimension + k) * stratum_chi[k]);
    return sum / 2;
}

// gamma(a) = (2/(d-1)) sum_j (-1)^j sum p h^q(Omega^p(log D^(1))) + #{i : <a_i> = a}.
inline monomial::ExponentFunction theorem_b_exponents(const BranchData& b) {
    auto e1 = eigen_data(b, 1);
    const Rational base = Rational(2 * log_hodge_euler(e1.support_size())) / (b.d - 1);
    monomial::ExponentFunction gamma(b.d);
    for (long a = 0; a < b.d; ++a) gamma[a] = base;
    for (long a : b.mults) gamma[a] += 1; // each point has chi = 1
    return gamma;
}

inline monomial::GammaMonomial theorem_b_monomial(const BranchData& b, long lambda) {
    if (!exact::is_unit(lambda, b.d))
        throw Error(ErrorKind::invalid_unit, std::to_string(lambda) + " is not a unit modulo " + std::to_string(b.d));
    auto e = eigen_data(b, lambda);
    monomial::GammaMonomial m(b.d);
    m.two_pi_i_power() = unit_period_exponent(e.support_size());
    for (auto i : e.support) m.exponent(b.d - exact::rep(Integer(b.mults[i]) * lambda, b.d)) += 1;
    return m;
}

} // namespace gamma_periods::cover
