#include <gtest/gtest.h>

#include "gamma_periods/cover/theorem_b.hpp"
#include "random_instances.hpp"

using namespace gamma_periods;
using namespace gamma_periods::cover;
using exact::make_rational;

namespace {

BranchData fermat() { return parse_branch_data("d = 3; points = 0, 1, inf; mults = 1, 1, 1"); }
BranchData two_point() { return parse_branch_data("d = 2; points = 0, 1; mults = 1, 1"); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::invalid_argument;
}

} // namespace

TEST(Parse, RoundTripsThroughText) {
    auto b = fermat();
    EXPECT_EQ(b.d, 3);
    ASSERT_EQ(b.points.size(), 3u);
    EXPECT_TRUE(b.points[2].infinity);
    EXPECT_EQ(to_string(b), "d = 3; points = 0, 1, inf; mults = 1, 1, 1");
    auto c = parse_branch_data("mults=2,1,3 ;points = -1/2, 7/3, infinity; d=6");
    EXPECT_EQ(c.points[0].value, make_rational(-1, 2));
    EXPECT_EQ(to_string(parse_branch_data(to_string(c))), to_string(c));
}

TEST(Parse, ErrorsCarryLineAndColumn) {
    try {
        parse_branch_data("d = 3; points = 0, , inf; mults = 1, 1, 1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 20);
    }
    try {
        parse_branch_data("d = 3;\npoints = 0, 1;\nmults = 1, x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 12);
    }
    EXPECT_THROW(parse_branch_data("d = 3; points = 0, 1"), ParseError);
    EXPECT_THROW(parse_branch_data("d = 3; points = 0; mults = 1, 2"), ParseError);
    EXPECT_THROW(parse_branch_data("d = 3; colour = red"), ParseError);
}

TEST(Validate, Examples) {
    auto s = validate(fermat());
    EXPECT_EQ(s.degree, 3);
    EXPECT_EQ(s.line_degree, 1);
    EXPECT_EQ(s.genus, 1);
    EXPECT_TRUE(s.connected);
    EXPECT_EQ(validate(two_point()).genus, 0);
    EXPECT_EQ(kind_of([] { validate(parse_branch_data("d=2; points=0; mults=1")); }), ErrorKind::no_line_bundle);
    EXPECT_EQ(kind_of([] { validate(parse_branch_data("d=2; points=0, 0; mults=1, 1")); }), ErrorKind::invalid_divisor);
}

TEST(Validate, ReportsDisconnectedCovers) {
    auto s = validate(parse_branch_data("d = 4; points = 0, 1; mults = 2, 2"));
    EXPECT_FALSE(s.connected);
    EXPECT_EQ(s.components, 2);
}

TEST(Eigen, Examples) {
    auto e1 = eigen_data(fermat(), 1);
    EXPECT_EQ(e1.sheaf_degree, 1);
    EXPECT_EQ(e1.support.size(), 3u);
    for (const auto& r : e1.residues) EXPECT_EQ(r, make_rational(1, 3));
    auto e2 = eigen_data(fermat(), 2);
    EXPECT_EQ(e2.sheaf_degree, 2);
    for (const auto& r : e2.residues) EXPECT_EQ(r, make_rational(2, 3));
    auto e0 = eigen_data(fermat(), 0);
    EXPECT_EQ(e0.sheaf_degree, 0);
    EXPECT_TRUE(e0.support.empty());
}

TEST(Hodge, Examples) {
    EXPECT_EQ(hodge_numbers(fermat(), 1), (HodgeRow{0, 0, 1, 0}));
    auto r2 = hodge_numbers(fermat(), 2);
    EXPECT_EQ(r2.h01, 1);
    EXPECT_EQ(r2.h10, 0);
    // lambda = 0 is P^1 itself: h00 = h11 = 1.
    EXPECT_EQ(hodge_numbers(fermat(), 0), (HodgeRow{1, 0, 0, 1}));
}

TEST(Hodge, HurwitzCrossCheck) {
    std::mt19937 rng(101);
    int connected = 0;
    for (int i = 0; i < 400; ++i) {
        auto b = test_support::random_branch_data(rng);
        auto s = validate(b);
        auto table = hodge_table(b);
        EXPECT_EQ(table[0], (HodgeRow{1, 0, 0, 1}));
        if (!s.connected) continue;
        ++connected;
        long sum = 0;
        for (long l = 1; l < b.d; ++l) sum += table[static_cast<std::size_t>(l)].h10 + table[static_cast<std::size_t>(l)].h01;
        EXPECT_EQ(sum, 2 * s.genus) << to_string(b);
        for (long l = 1; l < b.d; ++l) {
            const auto& row = table[static_cast<std::size_t>(l)];
            EXPECT_EQ(row.h10, table[static_cast<std::size_t>(b.d - l)].h01) << to_string(b);
        }
    }
    EXPECT_GT(connected, 100);
}

TEST(Eigen, SupportIsTheSameForAllUnits) {
    std::mt19937 rng(55);
    for (int i = 0; i < 300; ++i) {
        auto b = test_support::random_branch_data(rng);
        auto base = eigen_data(b, 1).support;
        for (long u : exact::unit_group(b.d)) EXPECT_EQ(eigen_data(b, u).support, base);
    }
}

TEST(TheoremBExponents, Examples) {
    auto g = theorem_b_exponents(fermat());
    EXPECT_EQ(g[0], Rational(-2));
    EXPECT_EQ(g[1], Rational(1));
    EXPECT_EQ(g[2], Rational(-2));
    EXPECT_EQ(monomial::moment(g, 1), Rational(-1));
    auto h = theorem_b_exponents(two_point());
    EXPECT_EQ(h[0], Rational(-2));
    EXPECT_EQ(h[1], Rational(0));
}

TEST(Hrr, Examples) {
    auto c1 = hrr_check(fermat(), 1);
    EXPECT_EQ(c1.lhs, Rational(1));
    EXPECT_EQ(c1.rhs, Rational(1));
    EXPECT_TRUE(c1.equal);
    auto c2 = hrr_check(fermat(), 2);
    EXPECT_EQ(c2.lhs, Rational(2));
    EXPECT_TRUE(c2.equal);
    auto c3 = hrr_check(two_point(), 1);
    EXPECT_EQ(c3.lhs, Rational(1));
    EXPECT_TRUE(c3.equal);
    EXPECT_EQ(kind_of([] { hrr_check(parse_branch_data("d=4; points=0,1; mults=1,3"), 2); }), ErrorKind::invalid_unit);
}

TEST(Hrr, RandomInstances) {
    std::mt19937 rng(202);
    for (int i = 0; i < 300; ++i) {
        auto b = test_support::random_branch_data(rng);
        for (long u : exact::unit_group(b.d)) EXPECT_TRUE(hrr_check(b, u).equal) << to_string(b) << " l=" << u;
    }
}

TEST(Serre, Examples) {
    EXPECT_TRUE(serre_duality_check(fermat(), 1));
    EXPECT_TRUE(serre_duality_check(two_point(), 1));
    EXPECT_TRUE(serre_duality_check(parse_branch_data("d=4; points=0,1,inf; mults=1,1,2"), 1));
    EXPECT_EQ(serre_duality_details(fermat(), 1).entries.size(), 4u);
}

TEST(Serre, RandomInstances) {
    std::mt19937 rng(303);
    for (int i = 0; i < 300; ++i) {
        auto b = test_support::random_branch_data(rng);
        for (long u : exact::unit_group(b.d)) EXPECT_TRUE(serre_duality_check(b, u)) << to_string(b) << " l=" << u;
    }
}

TEST(UnitPeriodExponent, Examples) {
    EXPECT_EQ(unit_period_exponent(0), Rational(1));
    EXPECT_EQ(unit_period_exponent(1), Rational(0));
    EXPECT_EQ(unit_period_exponent(3), Rational(-2));
    for (long m = 0; m < 20; ++m) EXPECT_EQ(unit_period_exponent(m), Rational(1 - m));
    EXPECT_THROW(unit_period_exponent(-1), Error);
}

TEST(TheoremBMonomial, Examples) {
    auto m1 = theorem_b_monomial(fermat(), 1);
    EXPECT_EQ(m1.two_pi_i_power(), Rational(-2));
    EXPECT_EQ(m1.exponent(2), Rational(3));
    EXPECT_EQ(m1.exponent(1), Rational(0));
    auto m2 = theorem_b_monomial(fermat(), 2);
    EXPECT_EQ(m2.two_pi_i_power(), Rational(-2));
    EXPECT_EQ(m2.exponent(1), Rational(3));
    auto m3 = theorem_b_monomial(two_point(), 1);
    EXPECT_EQ(m3.two_pi_i_power(), Rational(-1));
    EXPECT_EQ(m3.exponent(1), Rational(2));
    EXPECT_TRUE(monomial::monomial_is_algebraic(m3));
}

TEST(TheoremBMonomial, AgreesWithPredictionFromExponents) {
    std::mt19937 rng(404);
    for (int i = 0; i < 200; ++i) {
        auto b = test_support::random_branch_data(rng, 30, 8, 3);
        auto gamma = theorem_b_exponents(b);
        for (long u : exact::unit_group(b.d)) {
            auto diff = monomial::monomial_combine(theorem_b_monomial(b, u), monomial::gd_prediction(gamma, u), -1);
            EXPECT_TRUE(monomial::monomial_is_algebraic(diff)) << to_string(b) << " l=" << u;
        }
    }
}
