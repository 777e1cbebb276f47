#pragma once

#include "../exact/rational_matrix.hpp"
#include "exponent_function.hpp"

namespace gamma_periods::monomial {

// (1/d) sum_a eps(a) <a lambda>
inline Rational moment(const ExponentFunction& eps, long lambda) {
    const long d = eps.modulus();
    if (!exact::is_unit(lambda, d))
        throw Error(ErrorKind::invalid_unit, std::to_string(lambda) + " is not a unit modulo " + std::to_string(d));
    Rational s;
    for (long a = 1; a < d; ++a) s += eps[a] * exact::rep(a * lambda, d);
    return s / d;
}

inline bool koblitz_ogus_trivial(const ExponentFunction& eps) {
    for (long u : exact::unit_group(eps.modulus()))
        if (moment(eps, u) != 0) return false;
    return true;
}

// Matrix of the moment map: rows indexed by units, columns by a = 1..d-1.
inline exact::RationalMatrix moment_matrix(long d) {
    auto units = exact::unit_group(d);
    exact::RationalMatrix A(units.size(), static_cast<std::size_t>(d - 1));
    for (std::size_t i = 0; i < units.size(); ++i)
        for (long a = 1; a < d; ++a) A(i, static_cast<std::size_t>(a - 1)) = exact::make_rational(exact::rep(a * units[i], d), d);
    return A;
}

// Least-norm eps with eps(0) = 0 and prescribed moments on the units (ascending order).
inline ExponentFunction solve_moment_system(long d, const std::vector<Rational>& targets) {
    auto A = moment_matrix(d);
    if (targets.size() != A.rows())
        throw Error(ErrorKind::shape_error, "need one target per unit modulo " + std::to_string(d));
    auto gram = A * A.transpose();
    auto sol = exact::solve_rational_linear(gram, targets);
    if (!sol.solution) throw Error(ErrorKind::no_epsilon, "moment system is inconsistent");
    auto flat = A.transpose() * *sol.solution;
    ExponentFunction eps(d);
    for (long a = 1; a < d; ++a) eps[a] = flat[static_cast<std::size_t>(a - 1)];
    if (A * flat != targets) throw Error(ErrorKind::no_epsilon, "moment system has no exact solution");
    return eps;
}

inline ExponentFunction solve_epsilon(const HodgeFunction& p) {
    std::vector<Rational> targets;
    for (long u : exact::unit_group(p.modulus())) targets.emplace_back(p(u));
    return solve_moment_system(p.modulus(), targets);
}

// Basis of exponent functions (eps(0) = 0) whose moments all vanish.
inline std::vector<ExponentFunction> epsilon_gauge_basis(long d) {
    auto A = moment_matrix(d);
    auto sol = exact::solve_rational_linear(A, exact::RationalVector(A.rows()));
    std::vector<ExponentFunction> out;
    for (const auto& v : sol.kernel) {
        ExponentFunction eps(d);
        for (long a = 1; a < d; ++a) eps[a] = v[static_cast<std::size_t>(a - 1)];
        out.push_back(std::move(eps));
    }
    return out;
}

} // namespace gamma_periods::monomial
