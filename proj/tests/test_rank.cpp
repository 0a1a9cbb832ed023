#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albtwist/parser.hpp"
#include "albtwist/rank.hpp"

using namespace albtwist;

TEST_CASE("rank constants reproduce the published table") {
    // n in {3,4,5,6,10}: 2 d^2
    CHECK(rank_constant(3, 1) == 2);
    CHECK(rank_constant(3, 2) == 8);
    CHECK(rank_constant(4, 3) == 18);
    CHECK(rank_constant(5, 2) == 8);
    CHECK(rank_constant(6, 5) == 50);
    CHECK(rank_constant(10, 4) == 32);
    // n in {8,12}: d^2 - 8 n1 n2
    CHECK(rank_constant(8, 4, 1, 1) == 8);
    CHECK(rank_constant(8, 6, 2, 1) == 20);
    CHECK(rank_constant(12, 4, 2, 0) == 16);
    CHECK(rank_constant(12, 6, 1, 2) == 20);
}

TEST_CASE("endomorphism cross-check matrix, d <= 10") {
    // For n in {3,4,6} the block is one CM elliptic curve to the d-th
    // power: endo rank 2 d^2, agreeing with the constant.
    for (unsigned n : {3u, 4u, 6u})
        for (unsigned d = 1; d <= 10; ++d) {
            auto p = predict_rank(1, n, d);
            CHECK(p.cross_check == CrossCheck::Consistent);
        }
    // n in {5,10}: J(C1)^{d/2} with rho = 4 gives 4 (d/2)^2 = d^2, while
    // the published constant is 2 d^2 — the published value is larger.
    for (unsigned n : {5u, 10u})
        for (unsigned d = 2; d <= 10; d += 2) {
            auto p = predict_rank(1, n, d);
            CHECK(p.c_n == 2l * d * d);
            CHECK(p.endo_rank_per_copy == d * d);
            CHECK(p.cross_check == CrossCheck::PublishedExceedsComputation);
        }
    // n in {8,12}: blocks E1^n1 x E2^n1 x E_i^{2 n2} resp.
    // E_i^{2 n1} x E_rho^{2 n2} give 4 n1^2 + 8 n2^2 resp. 8 n1^2 + 8 n2^2.
    for (unsigned d = 2; d <= 10; d += 2)
        for (unsigned n1 = 0; n1 <= d / 2; ++n1) {
            unsigned n2 = d / 2 - n1;
            auto p8 = predict_rank(1, 8, d, n1, n2);
            CHECK(p8.endo_rank_per_copy == 4 * n1 * n1 + 8 * n2 * n2);
            auto p12 = predict_rank(1, 12, d, n1, n2);
            CHECK(p12.endo_rank_per_copy == 8 * n1 * n1 + 8 * n2 * n2);
        }
}

TEST_CASE("equality flag and conditionality") {
    CHECK(predict_rank(2, 3, 1).equality_holds);
    CHECK_FALSE(predict_rank(2, 8, 4, 1, 1).equality_holds);  // lower bound only
    CHECK(predict_rank(1, 3, 1).conditional);
    CHECK_FALSE(predict_rank(1, 3, 1, std::nullopt, std::nullopt, true, true).conditional);
    CHECK(predict_rank(1, 3, 1, std::nullopt, std::nullopt, true, false).conditional);
    CHECK(!predict_rank(1, 3, 1).torsion_note.empty());
}

TEST_CASE("prediction is linear in the tower length") {
    for (unsigned m = 1; m <= 6; ++m) {
        auto p = predict_rank(m, 3, 2);
        CHECK(p.c_n == 8);
        CHECK(p.published_rank == 8l * m);
        CHECK(p.endo_rank_path == static_cast<long>(m) * p.endo_rank_per_copy);
    }
    auto p = predict_rank(3, 6, 5);
    CHECK(p.published_rank == 150);
    CHECK(p.cross_check == CrossCheck::Consistent);
}

TEST_CASE("structure table") {
    CHECK(albanese_structure(3, 2).describe() == "E_rho^2");
    CHECK(albanese_structure(6, 1).describe() == "E_rho");
    CHECK(albanese_structure(4, 3).describe() == "E_i^3");
    CHECK(albanese_structure(5, 4).describe() == "J(C1)^2");
    CHECK(albanese_structure(10, 2).describe() == "J(C1)");
    CHECK(albanese_structure(8, 4, 1, 1).describe() == "J(C2) x E_i^2");
    CHECK(albanese_structure(8, 4, 2, 0).describe() == "J(C2)^2");
    CHECK(albanese_structure(12, 6, 1, 2).describe() == "E_i^2 x E_rho^4");
}

TEST_CASE("structure errors") {
    CHECK_THROWS_WITH_AS(albanese_structure(2, 1), doctest::Contains("pencil"),
                         precondition_error);
    CHECK_THROWS_WITH_AS(albanese_structure(7, 2), doctest::Contains("unsupported"),
                         precondition_error);
    CHECK_THROWS_WITH_AS(albanese_structure(9, 2), doctest::Contains("unsupported"),
                         precondition_error);
    for (unsigned n : {5u, 8u, 10u, 12u})
        CHECK_THROWS_WITH_AS(albanese_structure(n, 3, n >= 8 ? std::optional<unsigned>(1) : std::nullopt,
                                                n >= 8 ? std::optional<unsigned>(0) : std::nullopt),
                             doctest::Contains("even"), precondition_error);
    CHECK_THROWS_WITH_AS(albanese_structure(8, 4), doctest::Contains("require the splitting"),
                         precondition_error);
    CHECK_THROWS_WITH_AS(albanese_structure(8, 4, 2, 1), doctest::Contains("n1 + n2"),
                         precondition_error);
    CHECK_THROWS_WITH_AS(albanese_structure(3, 2, 1, 1), doctest::Contains("only apply"),
                         precondition_error);
    CHECK_THROWS_AS(predict_rank(0, 3, 1), precondition_error);
}

TEST_CASE("endomorphism rank examples") {
    // E_rho^2: 2 * 2^2 = 8
    CHECK(endo_rank(albanese_structure(3, 2)) == 8);
    // J(C1): rho = 4
    CHECK(endo_rank(albanese_structure(5, 2)) == 4);
    // J(C2) x E_i^2 -> E1 x E2 x E_i^2: 2 + 2 + 2*4 = 12
    CHECK(endo_rank(albanese_structure(8, 4, 1, 1)) == 12);
    // J(C2)^2 -> E1^2 x E2^2: 8 + 8 = 16
    CHECK(endo_rank(albanese_structure(8, 4, 2, 0)) == 16);
}

TEST_CASE("dimension bound") {
    MultiPoly f = parse_poly("y^2-x^3-1");  // irreducible cubic, r = 3
    FactoredCurve fc = FactoredCurve::make({{f, 1}}, f, 3, 0);
    CHECK(fc.r == 3);
    CHECK(fc.irreducibility_gcd == 1);
    auto b = albanese_dim_bound(fc);
    CHECK(b.lower == 0);
    // n = 3 divides r = 3: (3-1)(3-2)/2 = 1
    CHECK(b.upper == 1);

    // two factors, n = 5, r = 2+3 = 5 divisible by n: (5-1)(5-2)/2 = 6
    MultiPoly g = parse_poly("x^2+y^2-1");
    MultiPoly prod = g * f;
    FactoredCurve fc2 = FactoredCurve::make({{g, 1}, {f, 1}}, prod, 5, 0);
    CHECK(albanese_dim_bound(fc2).upper == 6);

    // n = 2 not dividing r = 3: (2-1)(3-1)/2 = 1
    FactoredCurve fc3 = FactoredCurve::make({{f, 1}}, f, 2, 1);
    CHECK(albanese_dim_bound(fc3).upper == 1);

    // squared factor with n0 even: gcd fails, bound refused
    MultiPoly g2 = g.pow(2);
    FactoredCurve fc4 = FactoredCurve::make({{g, 2}}, g2, 4, 0);
    CHECK(fc4.irreducibility_gcd == 2);
    CHECK_THROWS_WITH_AS(albanese_dim_bound(fc4), doctest::Contains("reducible"),
                         precondition_error);
}

TEST_CASE("factored curve validation") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    MultiPoly g = parse_poly("x^2+y^2-1");
    CHECK_THROWS_WITH_AS(FactoredCurve::make({{f, 1}}, g, 3, 0),
                         doctest::Contains("does not expand"), precondition_error);
    CHECK_THROWS_AS(FactoredCurve::make({}, f, 3, 0), precondition_error);
    CHECK_THROWS_AS(FactoredCurve::make({{f, 0}}, f, 3, 0), precondition_error);
    MultiPoly one = MultiPoly::constant(f.ring(), Rational(1));
    CHECK_THROWS_AS(FactoredCurve::make({{one, 1}}, one, 3, 0), precondition_error);
}
