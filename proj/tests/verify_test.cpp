#include <gtest/gtest.h>

#include <random>

#include "gamma_periods/verify/distribution.hpp"
#include "gamma_periods/verify/euler.hpp"
#include "gamma_periods/verify/lcs.hpp"
#include "gamma_periods/verify/theorem_b.hpp"
#include "gamma_periods/verify/unit_period.hpp"
#include "random_instances.hpp"

using namespace gamma_periods;
using namespace gamma_periods::verify;
using exact::make_rational;

namespace {

// mpmath closed forms, 60+ digits
const char* const lemniscate_period = "5.2441151085842396209296791797822388273655099028632463256336434";
const char* const cubic_plus_one_period = "8.4130926319527255670501144743017648127781332325439165770919639";

std::string poly_text(const VerificationReport& r) {
    return r.min_poly ? numerics::polynomial_to_string(*r.min_poly) : std::string("<none>");
}

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

TEST(Euler, Examples) {
    for (auto [a, b] : {std::pair{make_rational(1, 2), make_rational(1, 2)}, std::pair{make_rational(1, 3), make_rational(1, 3)},
                        std::pair{make_rational(2, 5), make_rational(1, 5)}}) {
        auto r = verify_euler(a, b, 50);
        EXPECT_EQ(r.verdict, Verdict::exact_match);
        EXPECT_LT(r.residual->log10_abs(), -45);
    }
}

TEST(Euler, MatchesFrozenBeta) {
    auto r = verify_euler(make_rational(2, 5), make_rational(1, 5), 60);
    numerics::Real want(std::string("6.8380854129399175063789974236045629424991140827285524477979179507"), r.lhs->prec());
    EXPECT_LT((abs(r.lhs->re - want) / want).log10_abs(), -58);
}

TEST(Euler, RejectsOutOfRange) {
    EXPECT_THROW(verify_euler(Rational(1), make_rational(1, 2), 30), Error);
}

TEST(Distribution, Examples) {
    EXPECT_EQ(verify_distribution(2, make_rational(1, 2), 50).verdict, Verdict::exact_match);
    EXPECT_EQ(verify_distribution(3, make_rational(1, 3), 50).verdict, Verdict::exact_match);
    auto r = verify_distribution(7, make_rational(2, 5), 50);
    EXPECT_EQ(r.verdict, Verdict::exact_match);
    EXPECT_LT(r.residual->log10_abs(), -45);
}

TEST(UnitPeriod, Examples) {
    for (long m : {1L, 3L, 4L}) {
        auto r = verify_unit_period(m, 40);
        EXPECT_EQ(r.verdict, Verdict::exact_match) << m;
    }
    EXPECT_EQ(verify_unit_period(4, 40).details["exponent"], "-3/1");
    EXPECT_THROW(verify_unit_period(0, 40), Error);
}

TEST(ClassNumber, Examples) {
    auto f4 = class_number(-4);
    EXPECT_EQ(f4.h, 1);
    EXPECT_EQ(f4.w, 4);
    auto f3 = class_number(-3);
    EXPECT_EQ(f3.h, 1);
    EXPECT_EQ(f3.w, 6);
    auto f23 = class_number(-23);
    EXPECT_EQ(f23.h, 3);
    EXPECT_EQ(f23.reduced_forms, (std::vector<std::array<long, 3>>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}}));
    EXPECT_EQ(f23.w, 2);
    EXPECT_EQ(f23.chi[22], -1);
    EXPECT_EQ(kind_of([] { class_number(-12); }), ErrorKind::invalid_discriminant);
    EXPECT_EQ(kind_of([] { class_number(5); }), ErrorKind::invalid_discriminant);
}

TEST(ClassNumber, KnownTable) {
    const std::map<long, long> h{{-7, 1}, {-8, 1}, {-11, 1}, {-15, 2}, {-20, 2}, {-24, 2}, {-31, 3},
                                 {-39, 4}, {-47, 5}, {-56, 4}, {-71, 7}, {-84, 4}, {-163, 1}};
    for (auto [D, want] : h) EXPECT_EQ(class_number(D).h, want) << D;
}

TEST(ClassNumber, CharacterIsOdd) {
    for (long D = -3; D > -200; --D) {
        if (!is_fundamental_discriminant(D)) continue;
        auto f = class_number(D);
        EXPECT_EQ(f.chi[static_cast<std::size_t>(-D - 1)], -1) << D;
    }
}

TEST(CmPeriod, Examples) {
    auto lem = cm_period(Rational(-1), Rational(0), 60);
    EXPECT_EQ(lem.real_roots, 3);
    numerics::Real want(std::string(lemniscate_period), lem.period.prec());
    EXPECT_LT((abs(lem.period - want) / want).log10_abs(), -58);
    EXPECT_LT(lem.discrepancy.log10_abs(), -60);

    auto cub = cm_period(Rational(0), Rational(1), 60);
    EXPECT_EQ(cub.real_roots, 1);
    numerics::Real want3(std::string(cubic_plus_one_period), cub.period.prec());
    EXPECT_LT((abs(cub.period - want3) / want3).log10_abs(), -58);

    EXPECT_EQ(kind_of([] { cm_period(Rational(0), Rational(0), 30); }), ErrorKind::invalid_curve);
    EXPECT_EQ(kind_of([] { cm_period(Rational(-3), Rational(2), 30); }), ErrorKind::invalid_curve);
}

TEST(Lcs, LemniscateAndScaling) {
    auto p = cm_period(Rational(-1), Rational(0), 60).period;
    auto r = verify_lcs(-4, p, 60, 4);
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_LE(r.min_poly->size(), 5u);
    auto scaled = verify_lcs(-4, p * numerics::sqrt(numerics::Real(2L, p.prec())), 60, 4);
    EXPECT_EQ(scaled.verdict, Verdict::algebraic_ratio_detected);
    auto rational = verify_lcs(-4, p * 3 / 7, 60, 4);
    EXPECT_EQ(rational.verdict, Verdict::algebraic_ratio_detected);
}

TEST(Lcs, DiscriminantMinusThree) {
    auto r = verify_lcs(-3, cm_period(Rational(0), Rational(16), 60).period, 60, 4);
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r), "3*x^4 - 4");
}

TEST(Lcs, CubicPlusOneNeedsHigherDegree) {
    // y^2 = x^3 + 1 differs from x^3 + 16 by a sixth root of 16, so the ratio has degree 12.
    auto p = cm_period(Rational(0), Rational(1), 120).period;
    auto r = verify_lcs(-3, p, 120, 12, 6);
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r), "27*x^12 - 16384");
}

TEST(TheoremB, FermatCubic) {
    auto b = cover::parse_branch_data("d=3; points=0,1,inf; mults=1,1,1");
    auto r1 = verify_theorem_b(b, 1, {60, 6, 20, 1});
    EXPECT_EQ(r1.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r1), "x - 3");
    EXPECT_TRUE(r1.details["moment_identity_holds"].get<bool>());
    EXPECT_TRUE(r1.details["difference_certified_algebraic"].get<bool>());
    EXPECT_EQ(r1.details["genus"], 1);
    auto r2 = verify_theorem_b(b, 2, {60, 0, 20, 1});
    EXPECT_EQ(poly_text(r2), "x - 1");
}

TEST(TheoremB, FourPointDoubleCover) {
    auto b = cover::parse_branch_data("d=2; points=0,1,2,inf; mults=1,1,1,1");
    auto r = verify_theorem_b(b, 1, {80, 4, 20, 2});
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(r.details["period_matrix"]["size"], 2);
    EXPECT_EQ(poly_text(r), "x - 2");
}

TEST(TheoremB, QuinticThreePoint) {
    auto b = cover::parse_branch_data("d=5; points=0,1,inf; mults=1,1,3");
    auto r = verify_theorem_b(b, 1, {60, 0, 20, 1});
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r), "x^2 - 5*x + 5");
}

TEST(TheoremB, FinitePointsOnly) {
    auto b = cover::parse_branch_data("d=3; points=0,1,2; mults=1,1,1");
    auto r = verify_theorem_b(b, 1, {60, 0, 20, 1});
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r), "x^3 - 108");
}

TEST(TheoremB, PreconditionsAreInputErrors) {
    EXPECT_EQ(kind_of([] { verify_theorem_b(cover::parse_branch_data("d=2; points=0; mults=1"), 1); }),
              ErrorKind::no_line_bundle);
    EXPECT_EQ(kind_of([] { verify_theorem_b(cover::parse_branch_data("d=4; points=0,1,inf; mults=1,1,2"), 2); }),
              ErrorKind::invalid_unit);
    EXPECT_EQ(kind_of([] { verify_theorem_b(cover::parse_branch_data("d=2; points=0,1; mults=1,1"), 1); }),
              ErrorKind::invalid_argument);
}

TEST(TheoremB, MomentIdentityOnRandomCovers) {
    std::mt19937 rng(77);
    for (int i = 0; i < 300; ++i) {
        auto b = test_support::random_branch_data(rng);
        auto gamma = cover::theorem_b_exponents(b);
        for (long u : exact::unit_group(b.d)) EXPECT_TRUE(moment_identity_check(b, gamma, u)["holds"].get<bool>()) << cover::to_string(b);
    }
}

TEST(TheoremB, ReportsAreDeterministic) {
    auto b = cover::parse_branch_data("d=3; points=0,1,inf; mults=1,1,1");
    auto a = to_json(verify_theorem_b(b, 1, {40, 0, 10, 1})).dump();
    auto c = to_json(verify_theorem_b(b, 1, {40, 0, 10, 3})).dump();
    EXPECT_EQ(a, c);
    EXPECT_EQ(a.find("runtime"), std::string::npos);
}

TEST(Duality, FermatCubic) {
    auto b = cover::parse_branch_data("d=3; points=0,1,inf; mults=1,1,1");
    auto r = verify_duality(b, 1, {60, 0, 20, 1});
    EXPECT_EQ(r.verdict, Verdict::algebraic_ratio_detected);
    EXPECT_EQ(poly_text(r), "3*x^2 + 1");
}

TEST(Report, JsonShape) {
    auto r = verify_euler(make_rational(1, 2), make_rational(1, 2), 30);
    auto j = to_json(r, true);
    EXPECT_EQ(j["verdict"], "exact-match");
    EXPECT_EQ(j["parameters"]["a"], "1/2");
    EXPECT_TRUE(j.contains("runtime_seconds"));
    EXPECT_EQ(j["lhs"]["digits"], 30);
    EXPECT_FALSE(to_json(r).contains("runtime_seconds"));
}
