#pragma once

#include <optional>
#include <vector>

#include "complex.hpp"

namespace gamma_periods::numerics {

struct IntegerRelation {
    std::vector<Integer> coefficients;
    Real residual; // |sum c_i v_i| / max |v_i|
    int iterations = 0;
};

struct PslqOptions {
    int max_iterations = 0; // 0: automatic
};

// PSLQ integer relation search (Ferguson-Bailey). Returns a relation with all
// |c_i| <= max_coeff and residual below 10^(-digits/2), or nothing when the
// norm bound proves there is none of that height.
inline std::optional<IntegerRelation> pslq(const std::vector<Real>& v, long digits, const Integer& max_coeff,
                                           PslqOptions options = {}) {
    const std::size_t n = v.size();
    if (n < 2) throw Error(ErrorKind::invalid_argument, "pslq needs at least two values");
    const Bits prec = bits_for_digits(digits + 10);

    std::vector<Real> x(n);
    Real xmax(0L, prec);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = v[i].with_prec(prec);
        xmax = max(xmax, abs(x[i]));
    }
    if (xmax.is_zero()) throw Error(ErrorKind::invalid_argument, "pslq input is the zero vector");

    auto residual_of = [&](const std::vector<Integer>& c) {
        Real s(0L, prec);
        for (std::size_t i = 0; i < n; ++i) s += x[i] * Real(c[i], prec);
        return abs(s) / xmax;
    };
    auto finish = [&](std::vector<Integer> c, int iterations) -> std::optional<IntegerRelation> {
        for (const auto& ci : c)
            if (abs(ci) > max_coeff) return std::nullopt;
        for (const auto& ci : c)
            if (ci != 0) {
                if (ci < 0)
                    for (auto& cj : c) cj = -cj;
                break;
            }
        Real r = residual_of(c);
        if (r.log10_abs() >= -static_cast<double>(digits) / 2) return std::nullopt;
        return IntegerRelation{std::move(c), r, iterations};
    };

    // An exact zero entry is a relation by itself.
    for (std::size_t i = 0; i < n; ++i)
        if (x[i].is_zero()) {
            std::vector<Integer> c(n);
            c[i] = 1;
            return finish(std::move(c), 0);
        }

    const Real gamma = sqrt(Real(Rational(4, 3), prec));
    std::vector<Real> s(n);
    {
        Real acc(0L, prec);
        for (std::size_t k = n; k-- > 0;) {
            acc += x[k] * x[k];
            s[k] = sqrt(acc);
        }
    }
    const Real t0 = s[0];
    std::vector<Real> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        y[k] = x[k] / t0;
        s[k] = s[k] / t0;
    }
    // H is n x (n-1), lower trapezoidal.
    std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0L, prec)));
    for (std::size_t i = 0; i < n; ++i) {
        if (i < n - 1) H[i][i] = s[i + 1] / s[i];
        for (std::size_t j = 0; j < i && j < n - 1; ++j) H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
    std::vector<std::vector<Integer>> B(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;

    const Real detect = pow10(-(3 * digits) / 4, prec);
    const Real tiny = pow10(-(digits + 5), prec);
    Integer entry_limit;
    mpz_ui_pow_ui(entry_limit.get_mpz_t(), 10, static_cast<unsigned long>(std::max<long>(digits - 5, 1)));

    auto reduce = [&](std::size_t i, std::size_t j_top) {
        for (std::size_t j = j_top + 1; j-- > 0;) {
            if (abs(H[j][j]) < tiny) continue;
            Real q = H[i][j] / H[j][j];
            Integer t = q.round_to_integer();
            if (t == 0) continue;
            Real tr(t, prec);
            y[j] += tr * y[i];
            for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
            for (std::size_t k = 0; k < n; ++k) B[k][j] += t * B[k][i];
        }
    };
    for (std::size_t i = 1; i < n; ++i) reduce(i, std::min(i - 1, n - 2));

    // Index of the smallest |y_j| when it is below the detection threshold.
    auto small_entry = [&]() -> std::optional<std::size_t> {
        std::size_t best_j = 0;
        for (std::size_t j = 1; j < n; ++j)
            if (abs(y[j]) < abs(y[best_j])) best_j = j;
        if (abs(y[best_j]) < detect) return best_j;
        return std::nullopt;
    };
    auto relation_at = [&](std::size_t j, int iter) {
        std::vector<Integer> c(n);
        for (std::size_t k = 0; k < n; ++k) c[k] = B[k][j];
        return finish(std::move(c), iter);
    };
    if (auto j = small_entry()) return relation_at(*j, 0);

    const int max_iter = options.max_iterations > 0 ? options.max_iterations : static_cast<int>(200 * n * n + 20 * digits * n);
    for (int iter = 1; iter <= max_iter; ++iter) {
        // Pivot selection.
        std::size_t m = 0;
        Real best(-1L, prec);
        Real g = gamma;
        for (std::size_t i = 0; i < n - 1; ++i) {
            Real val = g * abs(H[i][i]);
            if (val > best) {
                best = val;
                m = i;
            }
            g = g * gamma;
        }
        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
        if (m < n - 2) {
            Real r = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
            Real c1 = H[m][m] / r, c2 = H[m][m + 1] / r;
            for (std::size_t i = m; i < n; ++i) {
                Real a = H[i][m], b = H[i][m + 1];
                H[i][m] = c1 * a + c2 * b;
                H[i][m + 1] = c1 * b - c2 * a;
            }
        }
        for (std::size_t i = m + 1; i < n; ++i) reduce(i, std::min(i - 1, std::min(m + 1, n - 2)));

        if (auto j = small_entry()) return relation_at(*j, iter);

        // Any relation has norm >= 1 / max |H_jj|.
        Real hmax(0L, prec);
        for (std::size_t j = 0; j < n - 1; ++j) hmax = max(hmax, abs(H[j][j]));
        if (hmax.is_zero()) throw Error(ErrorKind::precision_exhausted, "pslq lost all precision");
        Real bound = Real(1L, prec) / hmax;
        if (bound > Real(max_coeff, prec) * Real(static_cast<long>(n), prec)) return std::nullopt;

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (abs(B[i][k]) > entry_limit)
                    throw Error(ErrorKind::precision_exhausted,
                                "pslq matrix entries exceed the working precision; raise digits");
    }
    throw Error(ErrorKind::precision_exhausted, "pslq iteration limit reached");
}

inline std::optional<IntegerRelation> pslq(const std::vector<Real>& v, long digits, long max_coeff) {
    return pslq(v, digits, Integer(max_coeff));
}

} // namespace gamma_periods::numerics
