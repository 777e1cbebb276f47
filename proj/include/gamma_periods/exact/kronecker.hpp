#pragma once

#include "integer.hpp"

namespace gamma_periods::exact {

// Kronecker symbol (D/n) for arbitrary integers, by quadratic reciprocity.
inline int kronecker_symbol(Integer D, Integer n) {
    if (n == 0) return (abs(D) == 1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) result = -result;
    }
    unsigned long twos = mpz_scan1(n.get_mpz_t(), 0);
    if (twos > 0) {
        if (mpz_even_p(D.get_mpz_t())) return 0;
        n >>= twos;
        if (twos % 2 == 1) {
            unsigned long r8 = mpz_fdiv_ui(D.get_mpz_t(), 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
    }
    // n odd positive: Jacobi symbol with D reduced into [0, n).
    Integer a;
    mpz_fdiv_r(a.get_mpz_t(), D.get_mpz_t(), n.get_mpz_t());
    while (a != 0) {
        unsigned long t = mpz_scan1(a.get_mpz_t(), 0);
        a >>= t;
        unsigned long r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
        if (t % 2 == 1 && (r8 == 3 || r8 == 5)) result = -result;
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && r8 % 4 == 3) result = -result;
        std::swap(a, n);
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? result : 0;
}

inline int kronecker_symbol(long D, long n) { return kronecker_symbol(Integer(D), Integer(n)); }

} // namespace gamma_periods::exact
