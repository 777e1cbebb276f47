#pragma once

#include <string>
#include <vector>

#include "parallel.hpp"
#include "quadrature.hpp"

namespace gamma_periods::numerics {

// Determinant by Gaussian elimination with partial pivoting; m is n x n row-major.
inline Complex determinant(std::vector<Complex> m, std::size_t n) {
    if (m.size() != n * n) throw Error(ErrorKind::shape_error, "determinant of a non-square matrix");
    if (n == 0) return Complex(1L, 64);
    Complex det(1L, m[0].prec());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r * n + c]) > abs(m[p * n + c])) p = r;
        if (m[p * n + c].is_zero()) return Complex(0L, det.prec());
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
            det = -det;
        }
        det *= m[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex f = m[r * n + c] / m[c * n + c];
            for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
        }
    }
    return det;
}

struct PeriodMatrix {
    std::size_t size = 0;
    std::vector<Complex> entries; // entries[cycle * size + form]
    std::vector<std::string> cycle_labels;
    std::vector<std::string> form_labels;
    std::string coordinate;       // integration variable and its relation to t
    Rational infinity_residue;    // residue at the point mapped to infinity
    int basis_shift = 0;

    const Complex& operator()(std::size_t cycle, std::size_t form) const { return entries[cycle * size + form]; }

    Complex determinant() const { return numerics::determinant(entries, size); }

    // Product of row norms, an upper bound for |det|.
    Real hadamard_bound() const {
        Real bound(1L, entries.empty() ? 64 : entries[0].prec());
        for (std::size_t i = 0; i < size; ++i) {
            Real row(0L, bound.prec());
            for (std::size_t j = 0; j < size; ++j) row += norm((*this)(i, j));
            bound *= sqrt(row);
        }
        return bound;
    }
};

struct PeriodMatrixOptions {
    int basis_shift = 0; // 0: forms with poles at x_j, x_{j+1}; 1: shifted by one index
    unsigned threads = 1;
};

namespace detail {

inline std::string label_point(const Rational& x) { return exact::is_integer(x) ? x.get_num().get_str() : exact::to_fraction_string(x); }

inline std::string minus_point(const std::string& var, const Rational& x) {
    if (x == 0) return var;
    if (x < 0) return var + " + " + label_point(-x);
    return var + " - " + label_point(x);
}

} // namespace detail

// Periods of the rank-one local system with the given residues at finite points (and at infinity
// when requested) on P^1. Entry [k][j] integrates prod |t - x_i|^{res_i} * w_j over [x_k, x_{k+1}]
// with the branch real-positive on the first interval and a factor exp(-pi i res) at each crossing.
inline PeriodMatrix twisted_period_matrix(const std::vector<Rational>& points_in, const std::vector<Rational>& residues_in,
                                          bool include_infinity, long digits, PeriodMatrixOptions options = {}) {
    if (points_in.size() != residues_in.size())
        throw Error(ErrorKind::shape_error, "points and residues differ in length");
    for (std::size_t i = 0; i + 1 < points_in.size(); ++i)
        if (!(points_in[i] < points_in[i + 1]))
            throw Error(ErrorKind::invalid_argument, "branch points must be strictly increasing");
    Rational total;
    for (const auto& r : residues_in) {
        if (r <= 0 || r >= 1)
            throw Error(ErrorKind::unsupported_residue, "residue " + exact::to_fraction_string(r) + " outside (0,1)");
        total += r;
    }
    const Rational r_inf = exact::frac_of(-total);
    if (include_infinity && r_inf == 0)
        throw Error(ErrorKind::unsupported_residue, "residue at infinity is 0; infinity is not a branch point");
    if (!include_infinity && r_inf != 0)
        throw Error(ErrorKind::invalid_argument, "residues do not sum to an integer; infinity must be included");
    const std::size_t m = points_in.size() + (include_infinity ? 1 : 0);
    if (m < 3) throw Error(ErrorKind::invalid_argument, "need at least 3 branch points with nonzero residue");

    PeriodMatrix out;
    out.basis_shift = options.basis_shift;
    std::vector<Rational> pts = points_in, res = residues_in;
    std::string var = "t";
    if (include_infinity) {
        out.coordinate = "t";
        out.infinity_residue = r_inf;
    } else {
        // Send the last point to infinity: u = 1/(t - x_N).
        const Rational xn = pts.back();
        out.infinity_residue = res.back();
        std::vector<std::pair<Rational, Rational>> moved;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) moved.emplace_back(1 / (pts[i] - xn), res[i]);
        std::sort(moved.begin(), moved.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        pts.clear();
        res.clear();
        for (auto& [p, r] : moved) {
            pts.push_back(p);
            res.push_back(r);
        }
        var = "u";
        out.coordinate = "u = 1/(" + detail::minus_point("t", xn) + ")";
    }

    const std::size_t np = pts.size();
    const std::size_t k = m - 2; // = np - 1
    out.size = k;
    const Bits prec = bits_for_digits(digits + 10);
    std::vector<Real> x;
    std::vector<Real> exps;
    for (std::size_t i = 0; i < np; ++i) {
        x.emplace_back(pts[i], prec);
        exps.emplace_back(res[i], prec);
    }

    // Form j: its poles (second may be absent) and numerator constant.
    struct Form {
        std::size_t a, b;
        bool two_poles;
    };
    std::vector<Form> forms;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t a = j + static_cast<std::size_t>(options.basis_shift);
        std::size_t b = a + 1;
        if (b < np) {
            forms.push_back({a, b, true});
            out.form_labels.push_back("d" + var + "*(" + detail::label_point(pts[b] - pts[a]) + ")/((" +
                                      detail::minus_point(var, pts[a]) + ")*(" + detail::minus_point(var, pts[b]) + "))");
        } else {
            forms.push_back({a, a, false});
            out.form_labels.push_back("d" + var + "/(" + detail::minus_point(var, pts[a]) + ")");
        }
    }
    for (std::size_t c = 0; c < k; ++c)
        out.cycle_labels.push_back("[" + detail::label_point(pts[c]) + ", " + detail::label_point(pts[c + 1]) + "]");

    out.entries.assign(k * k, Complex());
    parallel_for(k * k, options.threads, [&](std::size_t idx) {
        const std::size_t c = idx / k, j = idx % k;
        const Form& f = forms[j];
        auto integrand = [&](const Node& n) -> Complex {
            auto signed_diff = [&](std::size_t i) -> Real {
                if (i == c) return n.from_lo;
                if (i == c + 1) return -n.to_hi;
                return n.t - x[i];
            };
            Real v(1L, prec);
            for (std::size_t i = 0; i < np; ++i) v *= pow(abs(signed_diff(i)), exps[i]);
            if (f.two_poles)
                v *= (x[f.b] - x[f.a]) / (signed_diff(f.a) * signed_diff(f.b));
            else
                v /= signed_diff(f.a);
            return Complex(v);
        };
        Complex value = integrate_tanh_sinh(integrand, x[c], x[c + 1], digits).value;
        Rational crossed;
        for (std::size_t i = 1; i <= c; ++i) crossed += res[i];
        Real angle = -pi(prec) * Real(crossed, prec);
        out.entries[idx] = value * expi(angle);
    });

    Complex det = out.determinant();
    Real bound = out.hadamard_bound();
    if (abs(det) < bound * pow10(-digits / 2, prec))
        throw Error(ErrorKind::degenerate_basis, "period determinant vanishes to working precision");
    return out;
}

} // namespace gamma_periods::numerics
