#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "../exact/integer.hpp"

namespace gamma_periods::numerics {

using exact::Integer;
using exact::Rational;

using Bits = mpfr_prec_t;

inline constexpr int guard_bits = 32;

inline Bits bits_for_digits(long digits) {
    return static_cast<Bits>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + guard_bits;
}

// Arbitrary-precision real with its own precision. Binary operations produce the larger
// operand precision; a default-constructed value is a zero that defers to its partner.
class Real {
public:
    Real() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_zero(v_, 1); }
    Real(long x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, Bits prec) : Real(static_cast<long>(x), prec) {}
    Real(const Integer& x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Rational& x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(double x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const std::string& decimal, Bits prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw Error(ErrorKind::invalid_argument, "malformed decimal '" + decimal + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    Bits prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // Copy rounded to a new precision.
    Real with_prec(Bits prec) const {
        Real r = blank(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static Real blank(Bits prec) {
        Real r;
        mpfr_set_prec(r.v_, prec);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }
    // Approximate log10 |x|, usable for tolerances.
    double log10_abs() const {
        if (is_zero()) return -1e300;
        long e;
        double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
    }

    Integer round_to_integer() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    // Scientific decimal with the given significant digits.
    std::string to_string(long digits) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
        if (digits < 1) digits = 1;
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        if (is_zero()) return "0";
        std::string sign_text;
        if (mant[0] == '-') {
            sign_text = "-";
            mant.erase(0, 1);
        }
        std::string out = sign_text + mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
        return out;
    }

    Real operator-() const {
        Real r = blank(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

#define GP_REAL_BINOP(op, fn)                                                        \
    friend Real operator op(const Real& a, const Real& b) {                         \
        Real r = blank(std::max(a.prec(), b.prec()));                              \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                             \
        return r;                                                                    \
    }                                                                                \
    Real& operator op##=(const Real& b) { return *this = *this op b; }

    GP_REAL_BINOP(+, mpfr_add)
    GP_REAL_BINOP(-, mpfr_sub)
    GP_REAL_BINOP(*, mpfr_mul)
    GP_REAL_BINOP(/, mpfr_div)
#undef GP_REAL_BINOP

    friend Real operator+(const Real& a, long b) { Real r = blank(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r = blank(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r = blank(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, long b) { Real r = blank(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) { Real r = blank(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(long a, const Real& b) { Real r = blank(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }
    Real& operator+=(long b) { return *this = *this + b; }
    Real& operator-=(long b) { return *this = *this - b; }
    Real& operator*=(long b) { return *this = *this * b; }
    Real& operator/=(long b) { return *this = *this / b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

private:
    mpfr_t v_;
};

namespace detail {
template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline Real unary(const Real& x) {
    Real r = Real::blank(x.prec());
    F(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
} // namespace detail

inline Real abs(const Real& x) { return detail::unary<mpfr_abs>(x); }
inline Real sqrt(const Real& x) { return detail::unary<mpfr_sqrt>(x); }
inline Real exp(const Real& x) { return detail::unary<mpfr_exp>(x); }
inline Real log(const Real& x) { return detail::unary<mpfr_log>(x); }
inline Real sin(const Real& x) { return detail::unary<mpfr_sin>(x); }
inline Real cos(const Real& x) { return detail::unary<mpfr_cos>(x); }
inline Real sinh(const Real& x) { return detail::unary<mpfr_sinh>(x); }
inline Real cosh(const Real& x) { return detail::unary<mpfr_cosh>(x); }
inline Real tanh(const Real& x) { return detail::unary<mpfr_tanh>(x); }
inline Real floor(const Real& x) {
    Real r = Real::blank(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

inline Real atan2(const Real& y, const Real& x) {
    Real r = Real::blank(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real& x, const Real& y) {
    Real r = Real::blank(std::max(x.prec(), y.prec()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real& x, long n) {
    Real r = Real::blank(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

inline Real ldexp(const Real& x, long e) {
    Real r = Real::blank(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

inline Real pi(Bits prec) {
    Real r = Real::blank(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline Real euler_e(Bits prec) { return exp(Real(1, prec)); }

// 10^k at the given precision.
inline Real pow10(long k, Bits prec) { return pow(Real(10, prec), k); }

} // namespace gamma_periods::numerics
