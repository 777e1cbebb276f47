#pragma once

#include <optional>
#include <vector>

#include "integer.hpp"

namespace gamma_periods::exact {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error(ErrorKind::shape_error, "ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RationalVector operator*(const RationalVector& v) const {
        if (v.size() != cols_) throw Error(ErrorKind::shape_error, "matrix-vector size mismatch");
        RationalVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (o.rows_ != cols_) throw Error(ErrorKind::shape_error, "matrix product size mismatch");
        RationalMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct LinearSolution {
    // Empty when the system is inconsistent.
    std::optional<RationalVector> solution;
    // Primitive integer vectors, first nonzero entry positive.
    std::vector<RationalVector> kernel;
    // For inconsistent systems: y with y*A = 0 and y.b != 0.
    RationalVector certificate;
};

namespace detail {

inline RationalVector primitive(RationalVector v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g == 0) return v;
    int sign = 0;
    for (const auto& x : v)
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    for (auto& x : v) x /= Rational(g * sign);
    return v;
}

struct Echelon {
    std::vector<std::vector<Integer>> rows; // fraction-free echelon form of [A | b]
    std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination on the integer-scaled augmented matrix. Pivot = first nonzero entry.
inline Echelon bareiss(const RationalMatrix& A, const RationalVector& b) {
    const std::size_t n = A.rows(), m = A.cols();
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = b[i].get_den();
        for (std::size_t j = 0; j < m; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m; ++j) M[i][j] = Integer(A(i, j) * l);
        M[i][m] = Integer(b[i] * l);
    }
    Echelon e;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j <= m; ++j) {
                M[i][j] = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(M);
    return e;
}

} // namespace detail

// Exact solve of A x = b: particular solution (free variables zero) and a kernel basis.
inline LinearSolution solve_rational_linear(const RationalMatrix& A, const RationalVector& b) {
    if (b.size() != A.rows())
        throw Error(ErrorKind::shape_error, "right-hand side has " + std::to_string(b.size()) +
                                                " entries, matrix has " + std::to_string(A.rows()) + " rows");
    const std::size_t m = A.cols();
    auto e = detail::bareiss(A, b);
    const std::size_t rank = e.pivot_cols.size();
    LinearSolution out;

    bool consistent = true;
    for (std::size_t i = rank; i < e.rows.size(); ++i)
        if (e.rows[i][m] != 0) consistent = false;

    std::vector<bool> is_pivot(m, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    // Back substitution with a given right-hand column and free-variable assignment.
    auto back_substitute = [&](const std::vector<Integer>& rhs, RationalVector x) {
        for (std::size_t k = rank; k-- > 0;) {
            const auto& row = e.rows[k];
            std::size_t c = e.pivot_cols[k];
            Rational s(rhs[k]);
            for (std::size_t j = c + 1; j < m; ++j)
                if (row[j] != 0) s -= Rational(row[j]) * x[j];
            x[c] = s / Rational(row[c]);
        }
        return x;
    };

    if (consistent) {
        std::vector<Integer> rhs(rank);
        for (std::size_t k = 0; k < rank; ++k) rhs[k] = e.rows[k][m];
        out.solution = back_substitute(rhs, RationalVector(m));
    }
    std::vector<Integer> zero(rank);
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(m);
        x[f] = 1;
        out.kernel.push_back(detail::primitive(back_substitute(zero, std::move(x))));
    }
    if (!consistent) {
        auto left = solve_rational_linear(A.transpose(), RationalVector(m));
        for (const auto& y : left.kernel) {
            Rational dot;
            for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * b[i];
            if (dot != 0) {
                out.certificate = y;
                break;
            }
        }
    }
    return out;
}

} // namespace gamma_periods::exact
