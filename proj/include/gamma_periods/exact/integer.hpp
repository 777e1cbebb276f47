#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "../error.hpp"

namespace gamma_periods::exact {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Always "num/den", also for integers, so that readers never need two cases.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

namespace detail {

inline bool parse_integer_text(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace detail

// Accepts "n", "n/d" with optional sign; returns false on malformed input.
inline bool try_parse_rational(std::string_view text, Rational& out) {
    auto slash = text.find('/');
    Integer num, den(1);
    if (slash == std::string_view::npos) {
        if (!detail::parse_integer_text(text, num)) return false;
    } else {
        if (!detail::parse_integer_text(text.substr(0, slash), num)) return false;
        auto rest = text.substr(slash + 1);
        if (rest.empty() || rest[0] == '-' || rest[0] == '+') return false;
        if (!detail::parse_integer_text(rest, den) || den == 0) return false;
    }
    out = Rational(num, den);
    out.canonicalize();
    return true;
}

inline Rational parse_rational(std::string_view text) {
    Rational q;
    if (!try_parse_rational(text, q))
        throw Error(ErrorKind::invalid_argument, "malformed rational '" + std::string(text) + "'");
    return q;
}

} // namespace gamma_periods::exact
