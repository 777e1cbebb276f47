#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "../exact/residue.hpp"

namespace gamma_periods::cover {

using exact::Integer;
using exact::Rational;

struct BranchPoint {
    bool infinity = false;
    Rational value; // meaningful when finite

    static BranchPoint at(Rational x) { return {false, std::move(x)}; }
    static BranchPoint at_infinity() { return {true, Rational()}; }

    bool operator==(const BranchPoint& o) const { return infinity == o.infinity && (infinity || value == o.value); }
    std::string to_string() const {
        if (infinity) return "inf";
        return exact::is_integer(value) ? value.get_num().get_str() : exact::to_fraction_string(value);
    }
};

// A d-fold cyclic cover of P^1 branched along sum a_i P_i.
struct BranchData {
    long d = 2;
    std::vector<BranchPoint> points;
    std::vector<long> mults;

    std::size_t size() const { return points.size(); }
    Integer total_multiplicity() const {
        Integer n = 0;
        for (long a : mults) n += a;
        return n;
    }
};

inline std::string to_string(const BranchData& b) {
    std::string out = "d = " + std::to_string(b.d) + "; points = ";
    for (std::size_t i = 0; i < b.points.size(); ++i) out += (i ? ", " : "") + b.points[i].to_string();
    out += "; mults = ";
    for (std::size_t i = 0; i < b.mults.size(); ++i) out += (i ? ", " : "") + std::to_string(b.mults[i]);
    return out;
}

struct CoverSummary {
    Integer degree;        // N = sum a_i
    Integer line_degree;   // N / d
    long components = 1;   // gcd(d, a_1, ..., a_n)
    bool connected = true;
    long genus = 0;        // of Y when connected, else of each component
    long euler_characteristic = 0; // of Y (all components)
};

// Structural checks; throws on malformed data. Does not check divisibility.
inline void check_shape(const BranchData& b) {
    exact::require_modulus(b.d);
    if (b.points.size() != b.mults.size())
        throw Error(ErrorKind::shape_error, std::to_string(b.points.size()) + " points but " +
                                                std::to_string(b.mults.size()) + " multiplicities");
    for (long a : b.mults)
        if (a <= 0) throw Error(ErrorKind::invalid_divisor, "multiplicities must be positive, got " + std::to_string(a));
    for (std::size_t i = 0; i < b.points.size(); ++i)
        for (std::size_t j = i + 1; j < b.points.size(); ++j)
            if (b.points[i] == b.points[j])
                throw Error(ErrorKind::invalid_divisor, "branch point " + b.points[i].to_string() + " repeated");
}

inline CoverSummary validate(const BranchData& b) {
    check_shape(b);
    CoverSummary s;
    s.degree = b.total_multiplicity();
    if (s.degree % b.d != 0)
        throw Error(ErrorKind::no_line_bundle, std::to_string(b.d) + " does not divide the total multiplicity " +
                                                   s.degree.get_str());
    s.line_degree = s.degree / b.d;
    long g = b.d;
    for (long a : b.mults) g = std::gcd(g, a);
    s.components = g;
    s.connected = g == 1;
    // Riemann-Hurwitz for one component: degree d/g, ramification index (d/g)/gcd(a_i/g, d/g).
    const long dc = b.d / g;
    long chi = 2 * dc;
    for (long a : b.mults) chi -= dc - std::gcd(a / g, dc);
    s.euler_characteristic = g * chi;
    s.genus = (2 - chi) / 2;
    return s;
}

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Letters, digits and the characters in `extra`.
    std::string_view token(std::string_view extra) {
        skip_space();
        std::size_t start = pos_;
        while (!done()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || extra.find(c) != std::string_view::npos)
                ++pos_;
            else
                break;
        }
        return text_.substr(start, pos_ - start);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses "d = <int>; points = <p1>, ..., inf; mults = <a1>, ..." (keys in any order).
inline BranchData parse_branch_data(std::string_view text) {
    detail::Cursor cur(text);
    BranchData b;
    bool have_d = false, have_points = false, have_mults = false;
    std::size_t points_at = 0;
    for (;;) {
        cur.skip_space();
        if (cur.done()) break;
        std::size_t key_at = cur.pos();
        std::string key(cur.token("_"));
        if (key.empty()) cur.fail("expected a key (d, points or mults)");
        cur.expect('=');
        if (key == "d") {
            if (have_d) cur.fail("duplicate key 'd'", key_at);
            std::size_t at = (cur.skip_space(), cur.pos());
            auto tok = cur.token("-+");
            Integer v;
            if (!exact::detail::parse_integer_text(tok, v) || !v.fits_slong_p()) cur.fail("expected an integer modulus", at);
            b.d = v.get_si();
            have_d = true;
        } else if (key == "points" || key == "mults") {
            bool is_points = key == "points";
            if ((is_points && have_points) || (!is_points && have_mults)) cur.fail("duplicate key '" + key + "'", key_at);
            if (is_points) points_at = key_at;
            cur.skip_space();
            bool empty_list = cur.done() || cur.peek() == ';';
            while (!empty_list) {
                std::size_t at = (cur.skip_space(), cur.pos());
                auto tok = cur.token("-+/");
                if (tok.empty()) cur.fail(is_points ? "expected a point" : "expected a multiplicity", at);
                if (is_points) {
                    if (tok == "inf" || tok == "infinity" || tok == "oo") {
                        b.points.push_back(BranchPoint::at_infinity());
                    } else {
                        Rational q;
                        if (!exact::try_parse_rational(tok, q)) cur.fail("malformed point '" + std::string(tok) + "'", at);
                        b.points.push_back(BranchPoint::at(q));
                    }
                } else {
                    Integer v;
                    if (!exact::detail::parse_integer_text(tok, v) || !v.fits_slong_p())
                        cur.fail("malformed multiplicity '" + std::string(tok) + "'", at);
                    b.mults.push_back(v.get_si());
                }
                cur.skip_space();
                if (cur.peek() != ',') break;
                cur.advance();
            }
            (is_points ? have_points : have_mults) = true;
        } else {
            cur.fail("unknown key '" + key + "'", key_at);
        }
        cur.skip_space();
        if (cur.done()) break;
        if (cur.peek() != ';') cur.fail("expected ';'");
        cur.advance();
    }
    if (!have_d) cur.fail("missing key 'd'", 0);
    if (!have_points) cur.fail("missing key 'points'", 0);
    if (!have_mults) cur.fail("missing key 'mults'", 0);
    if (b.points.size() != b.mults.size())
        cur.fail(std::to_string(b.points.size()) + " points but " + std::to_string(b.mults.size()) + " multiplicities",
                 points_at);
    return b;
}

} // namespace gamma_periods::cover
