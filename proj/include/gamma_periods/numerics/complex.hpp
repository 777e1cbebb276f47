#pragma once

#include "real.hpp"

namespace gamma_periods::numerics {

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(Real::blank(re.prec())) { mpfr_set_zero(im.raw(), 1); }
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r, Bits prec) : re(r, prec), im(0L, prec) {}

    Bits prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex conj() const { return {re, -im}; }
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }

    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Complex& operator/=(const Complex& b) { return *this = *this / b; }
    Complex& operator*=(const Real& b) { return *this = *this * b; }
    Complex& operator/=(const Real& b) { return *this = *this / b; }
};

inline Complex make_complex(long re, long im, Bits prec) { return {Real(re, prec), Real(im, prec)}; }

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) {
    Real r = Real::blank(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

// exp(i * theta)
inline Complex expi(const Real& theta) { return {cos(theta), sin(theta)}; }

inline Complex exp(const Complex& z) { return expi(z.im) * exp(z.re); }

inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

// Principal branch, Re >= 0.
inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), z.im};
        return {Real(0L, z.prec()), sqrt(-z.re)};
    }
    Real r = abs(z);
    Real a = sqrt((r + z.re) / 2);
    Real b = z.im / (a * 2);
    return {a, b};
}

inline Complex pow(const Complex& z, const Real& y) {
    if (z.is_zero()) return z;
    return exp(log(z) * y);
}

inline Complex pow(const Complex& z, long n) {
    Complex result(1L, z.prec());
    Complex base = z;
    bool invert = n < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return invert ? Complex(1L, z.prec()) / result : result;
}

inline Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }

inline std::string to_string(const Complex& z, long digits) {
    return z.re.to_string(digits) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).to_string(digits) + "i";
}

} // namespace gamma_periods::numerics
