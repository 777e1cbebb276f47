#include <gtest/gtest.h>

#include <random>

#include "gamma_periods/monomial/epsilon.hpp"
#include "gamma_periods/monomial/evaluate.hpp"
#include "gamma_periods/monomial/gamma_monomial.hpp"
#include "gamma_periods/monomial/json.hpp"
#include "gamma_periods/numerics/min_poly.hpp"

using namespace gamma_periods;
using namespace gamma_periods::monomial;
using exact::make_rational;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::invalid_argument;
}

HodgeFunction random_hodge(std::mt19937& rng, long d) {
    // d = 2 has the single self-dual unit 1, so the weight must be even there.
    long w = static_cast<long>(rng() % 4);
    if (d == 2) w -= w % 2;
    std::map<long, long> p;
    for (long u : exact::unit_group(d)) {
        if (p.count(u)) continue;
        long v = d == 2 ? w / 2 : static_cast<long>(rng() % static_cast<unsigned>(w + 1));
        p[u] = v;
        p[exact::rep(-u, d)] = w - v;
    }
    return HodgeFunction(d, p, w);
}

GammaMonomial random_monomial(std::mt19937& rng, long d) {
    GammaMonomial m(d);
    m.two_pi_i_power() = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
    for (long a = 1; a < d; ++a)
        m.exponent(a) = rng() % 2 ? Rational(0) : make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    return m;
}

} // namespace

TEST(Moment, Examples) {
    ExponentFunction eps(3, {0, -1, 2});
    EXPECT_EQ(moment(eps, 1), Rational(1));
    EXPECT_EQ(moment(eps, 2), Rational(0));
    EXPECT_EQ(moment(ExponentFunction(7), 3), Rational(0));
    EXPECT_EQ(kind_of([&] { moment(ExponentFunction(6), 2); }), ErrorKind::invalid_unit);
}

TEST(KoblitzOgus, Examples) {
    EXPECT_TRUE(koblitz_ogus_trivial(ExponentFunction(5, {0, 1, -1, -1, 1})));
    EXPECT_TRUE(koblitz_ogus_trivial(ExponentFunction(9)));
    EXPECT_FALSE(koblitz_ogus_trivial(ExponentFunction(3, {0, -1, 2})));
}

TEST(SolveEpsilon, Examples) {
    auto e3 = solve_epsilon(HodgeFunction(3, {{1, 1}, {2, 0}}));
    EXPECT_EQ(moment(e3, 1), Rational(1));
    EXPECT_EQ(moment(e3, 2), Rational(0));
    EXPECT_EQ(e3[1], Rational(-1));
    EXPECT_EQ(e3[2], Rational(2));

    auto e2 = solve_epsilon(HodgeFunction(2, {{1, 0}}, 0));
    EXPECT_TRUE(e2.is_zero());

    auto e5 = solve_epsilon(HodgeFunction(5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    for (long l = 1; l < 5; ++l) EXPECT_EQ(moment(e5, l), Rational(1));
    for (long a = 1; a < 5; ++a) EXPECT_EQ(e5[a], make_rational(1, 2)); // least-norm, sympy
}

TEST(SolveEpsilon, LeastNormOracleModulusTwelve) {
    auto eps = solve_epsilon(HodgeFunction(12, {{1, 1}, {5, 0}, {7, 1}, {11, 0}}));
    const std::vector<Rational> want{make_rational(-19, 154), make_rational(-26, 77), make_rational(1, 11),
                                     make_rational(-19, 154), make_rational(47, 154), make_rational(1, 11),
                                     make_rational(-19, 154), make_rational(47, 154), make_rational(1, 11),
                                     make_rational(40, 77),  make_rational(47, 154)};
    for (long a = 1; a < 12; ++a) EXPECT_EQ(eps[a], want[static_cast<std::size_t>(a - 1)]) << a;
    EXPECT_EQ(eps[0], Rational(0));
}

TEST(SolveEpsilon, RandomRoundTripAndGauge) {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        long d = 2 + static_cast<long>(rng() % 23);
        auto p = random_hodge(rng, d);
        auto eps = solve_epsilon(p);
        for (long u : exact::unit_group(d)) EXPECT_EQ(moment(eps, u), Rational(p(u)));
        for (const auto& g : epsilon_gauge_basis(d)) {
            EXPECT_TRUE(koblitz_ogus_trivial(g));
            auto other = eps + g;
            for (long u : exact::unit_group(d)) EXPECT_EQ(moment(other, u), Rational(p(u)));
            EXPECT_TRUE(koblitz_ogus_trivial(other - eps));
        }
    }
}

TEST(SolveEpsilon, ShapeErrorOnWrongTargetCount) {
    EXPECT_EQ(kind_of([] { solve_moment_system(5, {Rational(1)}); }), ErrorKind::shape_error);
}

TEST(HodgeFunction, RejectsAsymmetry) {
    EXPECT_THROW(HodgeFunction(5, {{1, 1}, {2, 0}, {3, 0}, {4, 0}}), Error);
    EXPECT_THROW(HodgeFunction(5, {{1, 1}, {4, 0}}), Error);
    EXPECT_EQ(kind_of([] { HodgeFunction(6, {{1, 1}, {2, 0}, {5, 0}}, 1); }), ErrorKind::invalid_unit);
}

TEST(GdPrediction, Examples) {
    ExponentFunction eps(3, {0, -1, 2});
    auto m1 = gd_prediction(eps, 1);
    EXPECT_EQ(m1.exponent(1), Rational(2));
    EXPECT_EQ(m1.exponent(2), Rational(-1));
    EXPECT_EQ(m1.two_pi_i_power(), Rational(0));
    auto m2 = gd_prediction(eps, 2);
    EXPECT_EQ(m2.exponent(1), Rational(-1));
    EXPECT_EQ(m2.exponent(2), Rational(2));
    EXPECT_TRUE(gd_prediction(ExponentFunction(7), 3).is_identity());
}

TEST(GdPrediction, KoblitzOgusKernelIsAlgebraic) {
    for (long d = 2; d <= 20; ++d)
        for (const auto& g : epsilon_gauge_basis(d))
            for (long u : exact::unit_group(d)) EXPECT_TRUE(monomial_is_algebraic(gd_prediction(g, u))) << d;
}

TEST(Combine, Examples) {
    GammaMonomial x(5, make_rational(1, 2), {{1, Rational(2)}, {3, make_rational(-1, 3)}});
    EXPECT_TRUE(monomial_combine(x, monomial_inverse(x), 1).is_identity());
    auto same = monomial_combine(x, GammaMonomial(5), 5);
    EXPECT_EQ(same.two_pi_i_power(), x.two_pi_i_power());
    for (long a = 1; a < 5; ++a) EXPECT_EQ(same.exponent(a), x.exponent(a));
    auto c = monomial_combine(GammaMonomial(4, 1, {{1, 1}}), GammaMonomial(4, 0, {{1, 1}}), 2);
    EXPECT_EQ(c.two_pi_i_power(), Rational(1));
    EXPECT_EQ(c.exponent(1), Rational(3));
    EXPECT_EQ(kind_of([] { monomial_combine(GammaMonomial(3), GammaMonomial(4), 1); }), ErrorKind::incompatible_moduli);
}

TEST(Combine, GroupLaws) {
    std::mt19937 rng(31);
    auto same = [](const GammaMonomial& a, const GammaMonomial& b) {
        if (a.two_pi_i_power() != b.two_pi_i_power()) return false;
        for (long k = 1; k < a.modulus(); ++k)
            if (a.exponent(k) != b.exponent(k)) return false;
        return true;
    };
    for (int i = 0; i < 100; ++i) {
        long d = 2 + static_cast<long>(rng() % 11);
        auto x = random_monomial(rng, d), y = random_monomial(rng, d), z = random_monomial(rng, d);
        EXPECT_TRUE(same(monomial_combine(monomial_combine(x, y, 1), z, 1), monomial_combine(x, monomial_combine(y, z, 1), 1)));
        EXPECT_TRUE(same(monomial_combine(x, y, 1), monomial_combine(y, x, 1)));
        EXPECT_TRUE(monomial_combine(x, monomial_inverse(x), 1).is_identity());
    }
}

TEST(Reduce, Examples) {
    auto r = reduce_monomial(GammaMonomial(3, 0, {{1, 1}, {2, 1}}));
    EXPECT_TRUE(r.reduced.exponent(1) == 0 && r.reduced.exponent(2) == 0);
    EXPECT_EQ(r.reduced.two_pi_i_power(), Rational(1));
    ASSERT_EQ(r.certificate.size(), 1u);
    EXPECT_EQ(r.certificate[0].relation, "reflection");

    auto id = reduce_monomial(GammaMonomial(7));
    EXPECT_TRUE(id.reduced.is_identity());
    EXPECT_TRUE(id.certificate.empty());

    auto s = reduce_monomial(GammaMonomial(3, 0, {{1, 2}, {2, -1}}));
    EXPECT_EQ(s.reduced.exponent(1), Rational(3));
    EXPECT_EQ(s.reduced.exponent(2), Rational(0));
    EXPECT_EQ(s.reduced.two_pi_i_power(), Rational(-1));
}

TEST(Reduce, HalfAndDistribution) {
    auto h = reduce_monomial(GammaMonomial(2, -1, {{1, 2}}));
    EXPECT_TRUE(h.reduced.is_identity());
    EXPECT_EQ(h.certificate.at(0).relation, "duplication-at-half");

    // Gamma(1/5)Gamma(2/5)Gamma(3/5)Gamma(4/5) pairs off by reflection first.
    auto d5 = reduce_monomial(GammaMonomial(5, 0, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    EXPECT_TRUE(d5.reduced.exponent(1) == 0 && d5.reduced.exponent(4) == 0);
    EXPECT_EQ(d5.reduced.two_pi_i_power(), Rational(2));
}

TEST(Reduce, NumericValuePreservedUpToAlgebraicFactor) {
    std::mt19937 rng(41);
    const long digits = 60;
    int checked = 0;
    while (checked < 6) {
        long d = 2 + static_cast<long>(rng() % 11);
        GammaMonomial x(d);
        for (long a = 1; a < d; ++a) x.exponent(a) = static_cast<long>(rng() % 5) - 2;
        x.two_pi_i_power() = static_cast<long>(rng() % 3) - 1;
        auto r = reduce_monomial(x);
        auto ratio = monomial::evaluate(x, digits) / monomial::evaluate(r.reduced, digits);
        auto mp = numerics::min_poly(ratio, 2 * exact::totient(d), 10, digits);
        EXPECT_TRUE(mp.polynomial) << "d=" << d;
        ++checked;
    }
}

TEST(Algebraic, Examples) {
    EXPECT_TRUE(monomial_is_algebraic(GammaMonomial(5, 0, {{4, 1}, {3, -1}, {2, -1}, {1, 1}})));
    EXPECT_TRUE(monomial_is_algebraic(GammaMonomial(11)));
    EXPECT_FALSE(monomial_is_algebraic(GammaMonomial(3, 0, {{1, 1}})));
}

TEST(Json, RoundTrip) {
    GammaMonomial x(6, make_rational(-3, 2), {{1, Rational(2)}, {5, make_rational(-1, 3)}});
    auto j = to_json(x);
    EXPECT_EQ(j["two_pi_i_power"], "-3/2");
    auto back = gamma_monomial_from_json(j);
    EXPECT_EQ(back.two_pi_i_power(), x.two_pi_i_power());
    for (long a = 1; a < 6; ++a) EXPECT_EQ(back.exponent(a), x.exponent(a));

    ExponentFunction eps(4, {0, 1, -2, 3});
    auto e = exponent_function_from_json(to_json(eps));
    EXPECT_EQ(e.values(), eps.values());
    EXPECT_EQ(to_json(eps).dump(), to_json(e).dump());
}

TEST(Algebraic, CertifiedMonomialsAreNumericallyAlgebraic) {
    // Gamma(1/3)^2 / Gamma(1/6) ~ pi^{1/2}: needs duplication, not only reflection.
    // Its value is 2^{1/3} 6^{-1/2} e^{-i pi/4}.
    GammaMonomial dup(6, make_rational(-1, 2), {{1, Rational(-1)}, {2, Rational(2)}});
    EXPECT_TRUE(monomial_is_algebraic(dup));
    std::vector<GammaMonomial> cases{dup, GammaMonomial(5, 0, {{1, 1}, {2, -1}, {3, -1}, {4, 1}})};
    // Beyond d = 9 the algebraic values have degree above the search bound used here.
    for (long d = 2; d <= 9; ++d)
        for (const auto& g : epsilon_gauge_basis(d)) cases.push_back(gd_prediction(g, 1));
    for (const auto& m : cases) {
        ASSERT_TRUE(monomial_is_algebraic(m));
        // The phase carries extra roots of unity, so test the modulus.
        auto z = numerics::Complex(abs(monomial::evaluate(m, 160)));
        auto mp = numerics::min_poly(z, 12, 12, 160);
        EXPECT_TRUE(mp.polynomial) << m.modulus();
    }
}

TEST(Algebraic, ConstantButNonzeroWeightIsRejected) {
    // Gamma(1/3) Gamma(2/3) alone is 2 pi / sqrt 3, not algebraic.
    EXPECT_FALSE(monomial_is_algebraic(GammaMonomial(3, 0, {{1, 1}, {2, 1}})));
    EXPECT_TRUE(monomial_is_algebraic(GammaMonomial(3, -1, {{1, 1}, {2, 1}})));
}
