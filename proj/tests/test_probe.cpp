#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albtwist/catalog.hpp"
#include "albtwist/parser.hpp"
#include "albtwist/probe.hpp"

using namespace albtwist;

TEST_CASE("modular helpers") {
    CHECK(pow_mod(2, 10, 1000003) == 1024);
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(inv_mod(1, 2) == 1);
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
}

TEST_CASE("roots of unity in F_p") {
    // order 3 mod 7: 2 and 4; smallest is 2
    CHECK(smallest_root_of_unity(7, 3) == 2);
    CHECK(smallest_root_of_unity(13, 4) == 5);  // 5^2 = 25 = -1 mod 13
    CHECK(smallest_root_of_unity(11, 5) == 3);
    CHECK_THROWS_AS(smallest_root_of_unity(7, 4), precondition_error);  // 4 does not divide 6
}

TEST_CASE("rational and cyclotomic reduction") {
    CHECK(reduce_rational(Rational(5), 7) == 5);
    CHECK(reduce_rational(Rational(1) / Rational(3), 7) == 5);
    CHECK(reduce_rational(Rational(-1), 7) == 6);
    CHECK_THROWS_WITH_AS(reduce_rational(Rational(1) / Rational(7), 7),
                         doctest::Contains("denominator"), precondition_error);
    // zeta3 -> 2 mod 7; zeta3 + 1 -> 3
    std::uint64_t r = smallest_root_of_unity(7, 3);
    CHECK(reduce_cyclo(CycloNum::zeta(3), 7, r) == 2);
    CHECK(reduce_cyclo(CycloNum::zeta(3) + CycloNum(Rational(1)), 7, r) == 3);
}

TEST_CASE("point counts on the catalog curves") {
    // y^2 = x^3 + 1 over F_7: 12 points (including infinity)
    CurveCount c = count_hyperelliptic({1, 0, 0, 1}, 7);
    CHECK(c.naive == 12);
    CHECK(c.char_sum == 12);
    CHECK(c.agree);
    // y^2 = x^3 + x over F_5: supersingular (5 = 1 mod 4 fails; p = 3 mod 4
    // gives p + 1): over F_7, 7 = 3 mod 4 -> 8 points
    CurveCount ci = count_hyperelliptic({0, 1, 0, 1}, 7);
    CHECK(ci.naive == 8);
    CHECK(ci.agree);
    // y^2 = x^3 + 1 over F_5 (5 = 2 mod 3, supersingular): 6 points
    CurveCount cs = count_hyperelliptic({1, 0, 0, 1}, 5);
    CHECK(cs.naive == 6);
    CHECK(cs.agree);
}

TEST_CASE("supersingular pattern p + 1 across several primes") {
    // y^2 = x^3 + 1 is supersingular at p = 2 mod 3
    for (std::uint64_t p : {5ull, 11ull, 17ull, 23ull, 29ull, 41ull}) {
        CurveCount c = count_hyperelliptic({1, 0, 0, 1}, p);
        CHECK(c.naive == p + 1);
        CHECK(c.agree);
    }
    // y^2 = x^3 + x is supersingular at p = 3 mod 4
    for (std::uint64_t p : {7ull, 11ull, 19ull, 23ull, 31ull}) {
        CurveCount c = count_hyperelliptic({0, 1, 0, 1}, p);
        CHECK(c.naive == p + 1);
        CHECK(c.agree);
    }
}

TEST_CASE("counting paths agree on genus-2 and even-degree models") {
    // degree 5: one point at infinity
    CurveCount c5 = count_hyperelliptic({1, 0, 0, 0, 0, 1}, 11);  // y^2 = x^5 + 1
    CHECK(c5.agree);
    // degree 6: 2 or 0 points at infinity depending on the leading QR
    CurveCount c6a = count_hyperelliptic({1, 0, 0, 0, 0, 0, 1}, 11);
    CHECK(c6a.agree);
    CurveCount c6b = count_hyperelliptic({1, 0, 0, 0, 0, 0, 2}, 11);
    CHECK(c6b.agree);
    // larger prime to exercise the parallel kernel meaningfully
    CurveCount big = count_hyperelliptic({1, 2, 3, 4, 5, 1}, 10007);
    CHECK(big.agree);
}

TEST_CASE("affine zero count") {
    RingPtr xy = make_ring({"x", "y"});
    // x*y = 0 over F_5: 9 affine zeros
    MultiPoly f = MultiPoly::variable(xy, "x") * MultiPoly::variable(xy, "y");
    CHECK(count_affine_zeros(f, 5, 1) == 9);
    // y^2 - x^3 - 1 over F_7: 11 affine points
    CHECK(count_affine_zeros(parse_poly("y^2-x^3-1"), 7, 1) == 11);
}

TEST_CASE("prime probes") {
    auto e_rho = catalog_get("E_rho").elliptic.value();
    PrimeProbe pr = probe_curve(e_rho, 7, 3);
    CHECK(pr.p == 7);
    CHECK(pr.root_of_unity == 2);
    CHECK(pr.other_roots == std::vector<std::uint64_t>{4});
    CHECK(pr.counts.at(e_rho.label) == 12);
    CHECK(pr.counting_paths_agree);

    auto c1 = catalog_get("C1").genus2.value();
    PrimeProbe pg = probe_genus2(c1, 11, 5);
    CHECK(pg.root_of_unity == 3);
    CHECK(pg.counting_paths_agree);

    PrimeProbe pp = probe_poly(parse_poly("y^2-x^3-1"), 7, 3);
    CHECK(pp.counts.at("affine_zeros") == 11);
}

TEST_CASE("probe preconditions") {
    auto e_rho = catalog_get("E_rho").elliptic.value();
    // p must be 1 mod n
    CHECK_THROWS_AS(probe_curve(e_rho, 5, 3), precondition_error);
    // p dividing the discriminant is rejected
    CHECK_THROWS_AS(probe_curve(e_rho, 3, 1), precondition_error);
    CHECK_THROWS_AS(probe_curve(e_rho, 6, 1), precondition_error);  // composite
}

TEST_CASE("tower probe validates the twist identity mod p") {
    CoverSpec spec = make_cover(parse_poly("y^2-x^3-1"), 3);
    PrimeProbe pt = probe_tower(spec, 2, 13, 50, 42);
    CHECK(pt.twist_checks_passed);
    CHECK(pt.twist_samples > 0);
    // deterministic under the same seed
    PrimeProbe pt2 = probe_tower(spec, 2, 13, 50, 42);
    CHECK(pt2.twist_samples == pt.twist_samples);
}
