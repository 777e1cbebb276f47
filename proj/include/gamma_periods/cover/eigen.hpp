#pragma once

#include <array>

#include "branch_data.hpp"

namespace gamma_periods::cover {

// Cohomology of O(k) on P^1.
inline long h0_line(long k) { return std::max(k + 1, 0L); }
inline long h1_line(long k) { return std::max(-k - 1, 0L); }
inline long hq_line(int q, long k) { return q == 0 ? h0_line(k) : h1_line(k); }

struct EigenData {
    long lambda = 0;
    Integer sheaf_degree;          // deg L^(lambda)
    std::vector<std::size_t> support; // indices i with d not dividing a_i lambda
    std::vector<Rational> residues;   // <a_i lambda>/d per point, 0 off the support

    long support_size() const { return static_cast<long>(support.size()); }
};

inline EigenData eigen_data(const BranchData& b, long lambda) {
    validate(b);
    const long d = b.d;
    EigenData e;
    e.lambda = exact::rep(lambda, d);
    Integer deg = Integer(e.lambda) * b.total_multiplicity() / d;
    Rational residue_sum;
    for (std::size_t i = 0; i < b.size(); ++i) {
        Integer al = Integer(b.mults[i]) * e.lambda;
        deg -= exact::floor_div(al, d);
        long r = exact::rep(al, d);
        e.residues.push_back(exact::make_rational(r, d));
        residue_sum += e.residues.back();
        if (r != 0) e.support.push_back(i);
    }
    e.sheaf_degree = deg;
    if (residue_sum != Rational(deg))
        throw Error(ErrorKind::invalid_argument, "internal: residue sum differs from eigensheaf degree");
    return e;
}

// h^{p,q}_lambda(Y), p, q in {0, 1}.
struct HodgeRow {
    long h00 = 0, h01 = 0, h10 = 0, h11 = 0;
    long operator()(int p, int q) const { return p == 0 ? (q == 0 ? h00 : h01) : (q == 0 ? h10 : h11); }
    bool operator==(const HodgeRow&) const = default;
};

inline HodgeRow hodge_row_from(const EigenData& e) {
    const long dual = -e.sheaf_degree.get_si();
    const long twisted = dual - 2 + e.support_size();
    return {h0_line(dual), h1_line(dual), h0_line(twisted), h1_line(twisted)};
}

inline HodgeRow hodge_numbers(const BranchData& b, long lambda) { return hodge_row_from(eigen_data(b, lambda)); }

// Rows for lambda = 0 .. d-1.
inline std::vector<HodgeRow> hodge_table(const BranchData& b) {
    std::vector<HodgeRow> rows;
    for (long l = 0; l < b.d; ++l) rows.push_back(hodge_numbers(b, l));
    return rows;
}

// sum_j (-1)^j sum_{p+q=j} p h^{p,q}, for a row of Hodge numbers.
inline long weighted_hodge_euler(const HodgeRow& row) { return -row.h10 + row.h11; }

// Same sum for the sheaves Omega^p_{P^1}(log D) with |D| = m: only p = 1 contributes.
inline long log_hodge_euler(long m) {
    const long k = m - 2; // Omega^1(log D) = O(m - 2)
    return -h0_line(k) + h1_line(k);
}

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

// Riemann-Roch identity: Hodge side minus logarithmic side equals the residue sum.
inline IdentityCheck hrr_check(const BranchData& b, long lambda) {
    if (!exact::is_unit(lambda, b.d))
        throw Error(ErrorKind::invalid_unit, std::to_string(lambda) + " is not a unit modulo " + std::to_string(b.d));
    auto e = eigen_data(b, lambda);
    IdentityCheck c;
    c.lhs = Rational(weighted_hodge_euler(hodge_row_from(e)) - log_hodge_euler(e.support_size()));
    for (auto i : e.support) c.rhs += e.residues[i];
    c.equal = c.lhs == c.rhs;
    return c;
}

struct DualityEntry {
    int p = 0, q = 0;
    long lhs = 0, rhs = 0;
};

struct DualityCheck {
    std::vector<DualityEntry> entries;
    bool holds = true;
};

// h^q(L^(-lambda)^-1 (x) Omega^p(log D)) against h^{1-q}(L^(lambda)^-1 (x) Omega^{1-p}(log D)(-H)),
// H = D_red - D^(lambda), all as degrees on P^1.
inline DualityCheck serre_duality_details(const BranchData& b, long lambda) {
    if (!exact::is_unit(lambda, b.d))
        throw Error(ErrorKind::invalid_unit, std::to_string(lambda) + " is not a unit modulo " + std::to_string(b.d));
    auto plus = eigen_data(b, lambda);
    auto minus = eigen_data(b, -lambda);
    const long reduced = static_cast<long>(b.size());
    const long h = reduced - plus.support_size();
    const long log_twist = reduced - 2; // deg Omega^1(log D_red)
    DualityCheck out;
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            long left_degree = -minus.sheaf_degree.get_si() + (p == 1 ? log_twist : 0);
            long right_degree = -plus.sheaf_degree.get_si() + (p == 0 ? log_twist : 0) - h;
            DualityEntry entry{p, q, hq_line(q, left_degree), hq_line(1 - q, right_degree)};
            if (entry.lhs != entry.rhs) out.holds = false;
            out.entries.push_back(entry);
        }
    return out;
}

inline bool serre_duality_check(const BranchData& b, long lambda) { return serre_duality_details(b, lambda).holds; }

} // namespace gamma_periods::cover
