#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "albtwist/catalog.hpp"
#include "albtwist/parser.hpp"
#include "albtwist/verify.hpp"

using namespace albtwist;

namespace {

// Random dense polynomial in (x, y) of the given total degree; coefficients
// are small integers, optionally mixed with zeta_n multiples.
MultiPoly random_f(std::mt19937_64& rng, unsigned deg, unsigned zeta_order) {
    RingPtr xy = make_ring({"x", "y"});
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> zpow(0, zeta_order > 1 ? zeta_order - 1 : 0);
    MultiPoly f(xy);
    for (unsigned i = 0; i <= deg; ++i)
        for (unsigned j = 0; i + j <= deg; ++j) {
            int c = coeff(rng);
            if (c == 0 && !(i == deg && j == 0)) continue;
            if (i == deg && j == 0 && c == 0) c = 1;  // keep the degree exact
            CycloNum z = zeta_order > 1 ? CycloNum::zeta(zeta_order, zpow(rng)) * CycloNum(Rational(c))
                                        : CycloNum(Rational(c));
            f += MultiPoly::variable(xy, "x", i) * MultiPoly::variable(xy, "y", j) *
                 MultiPoly::constant(xy, z);
        }
    return f;
}

}  // namespace

TEST_CASE("membership holds for random base curves and towers") {
    std::mt19937_64 rng(20240818);
    for (unsigned n : {2u, 3u, 4u, 6u})
        for (unsigned m : {1u, 2u, 3u})
            for (unsigned deg : {2u, 3u, 4u}) {
                unsigned zo = (deg == 4) ? n : 1;  // exercise zeta coefficients too
                MultiPoly f = random_f(rng, deg, zo);
                TowerPresentation t = build_tower(make_cover(f, n), m);
                MembershipReport rep = verify_membership(t);
                REQUIRE(rep.points.size() == m);
                CHECK(rep.all_pass);
                // the first point needs no rewriting beyond w1^n -> f1
                for (const auto& pr : rep.points) CHECK(pr.passes);
            }
}

TEST_CASE("membership detects planted corruptions") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    TowerPresentation t = build_tower(make_cover(f, 3), 2);

    TwistPoint bad = t.points[1];
    bad.x = bad.x + MultiPoly::constant(t.ring, Rational(1));  // shift x
    CHECK_FALSE(verify_point(t, bad, 2).passes);

    TwistPoint bad2 = t.points[1];
    bad2.z_num = MultiPoly::variable(t.ring, "w2", 2);  // wrong power of the root
    CHECK_FALSE(verify_point(t, bad2, 2).passes);

    TwistPoint bad3 = t.points[0];
    bad3.z_den = MultiPoly::variable(t.ring, "w1");  // z = 1/w1 instead of 1
    CHECK_FALSE(verify_point(t, bad3, 1).passes);
}

TEST_CASE("descent relations") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    for (unsigned n : {2u, 3u, 5u}) {
        TowerPresentation t = build_tower(make_cover(f, n), 3);
        DescentReport rep = verify_descent(t);
        REQUIRE(rep.relation_ok.size() == 2);
        CHECK(rep.all_pass);
    }
    // negative control: corrupt one quotient relation's exponent
    TowerPresentation t = build_tower(make_cover(f, 3), 2);
    t.quotient_relations[0] =
        MultiPoly::variable(t.ring, "z1", 4) -
        (t.quotient_relations[0] - MultiPoly::variable(t.ring, "z1", 3));
    CHECK_FALSE(verify_descent(t).all_pass);
}

TEST_CASE("CM automorphisms of the catalog curves") {
    // y^2 = x^3 + 1 with (x, y) -> (zeta3 x, y), order 3
    auto e_rho = catalog_get("E_rho").elliptic.value();
    RationalMap rho_map = RationalMap::linear(CycloNum::zeta(3), CycloNum(Rational(1)));
    CmReport r1 = verify_cm_automorphism(e_rho, rho_map, 3);
    CHECK(r1.on_curve);
    CHECK(r1.observed_order == 3);
    CHECK(r1.passes);

    // y^2 = x^3 + x with (x, y) -> (-x, zeta4 y), order 4
    auto e_i = catalog_get("E_i").elliptic.value();
    RationalMap i_map = RationalMap::linear(CycloNum(Rational(-1)), CycloNum::zeta(4));
    CmReport r2 = verify_cm_automorphism(e_i, i_map, 4);
    CHECK(r2.observed_order == 4);
    CHECK(r2.passes);

    // y^2 = x^5 + 1 with (x, y) -> (zeta5 x, y), order 5
    auto c1 = catalog_get("C1").genus2.value();
    RationalMap z5_map = RationalMap::linear(CycloNum::zeta(5), CycloNum(Rational(1)));
    CmReport r3 = verify_cm_automorphism(c1, z5_map, 5);
    CHECK(r3.observed_order == 5);
    CHECK(r3.passes);
}

TEST_CASE("CM verification rejects wrong maps and wrong orders") {
    auto e_rho = catalog_get("E_rho").elliptic.value();
    // (zeta3 x, y) does not preserve y^2 = x^3 + x
    auto e_i = catalog_get("E_i").elliptic.value();
    RationalMap rho_map = RationalMap::linear(CycloNum::zeta(3), CycloNum(Rational(1)));
    CmReport bad1 = verify_cm_automorphism(e_i, rho_map, 3);
    CHECK_FALSE(bad1.on_curve);
    CHECK_FALSE(bad1.passes);
    // right map, wrong claimed order
    CmReport bad2 = verify_cm_automorphism(e_rho, rho_map, 6);
    CHECK(bad2.on_curve);
    CHECK_FALSE(bad2.order_matches);
    CHECK_FALSE(bad2.passes);
    // identity claimed as order 2
    CmReport bad3 = verify_cm_automorphism(e_rho, RationalMap::identity(), 2);
    CHECK(bad3.observed_order == 1);
    CHECK_FALSE(bad3.passes);
}

TEST_CASE("2-isogeny enumeration on rank-one curves") {
    // y^2 = x^3 + x^2 - 3x + 1 has the rational 2-torsion x = 4/3 after
    // depression; its 2-isogenous quotient has the same j iff the curve has
    // CM by an order where 2 splits or ramifies suitably.
    auto e1 = catalog_get("E1").elliptic.value();
    IsogenyReport r = verify_isogeny_cm(e1, 2);
    CHECK(r.ell == 2);
    REQUIRE_FALSE(r.quotients.empty());
    CHECK(r.any_match);
    CHECK(r.verdict == "self-isogeny evidence");

    auto e2c = catalog_get("E2").elliptic_corrected.value();
    IsogenyReport r2 = verify_isogeny_cm(e2c, 2);
    CHECK(r2.any_match);
    CHECK(r2.verdict == "self-isogeny evidence");
    CHECK(r.j_input == r2.j_input);  // both have j = 8000
}

TEST_CASE("isogeny enumeration: honest negatives") {
    // y^2 = x^3 + 1 (j = 0): no rational 2-torsion-quotient matches j = 0
    auto e_rho = catalog_get("E_rho").elliptic.value();
    IsogenyReport r = verify_isogeny_cm(e_rho, 2);
    CHECK_FALSE(r.any_match);
    CHECK(r.verdict == "no evidence at this degree");
    // y^2 = x^3 + x (j = 1728) at ell = 3: no rational 3-kernel evidence
    auto e_i = catalog_get("E_i").elliptic.value();
    IsogenyReport r3 = verify_isogeny_cm(e_i, 3);
    CHECK(r3.verdict == "no evidence at this degree");
}

TEST_CASE("genus-2 splitting of y^2 = x^5 + x") {
    auto c2 = catalog_get("C2").genus2.value();
    RationalMap inv = RationalMap{
        MultiPoly::constant(make_ring({"x", "y"}), Rational(1)),
        MultiPoly::variable(make_ring({"x", "y"}), "x"),
        MultiPoly::variable(make_ring({"x", "y"}), "y"),
        MultiPoly::variable(make_ring({"x", "y"}), "x", 3)};
    CycloNum j8000(Rational(8000));
    SplitReport rep = verify_genus2_split(c2, inv, j8000, j8000);
    CHECK(rep.j_plus == j8000);
    CHECK(rep.j_minus == j8000);
    CHECK(rep.matches);
    // wrong expectation fails honestly
    SplitReport repbad = verify_genus2_split(c2, inv, j8000, CycloNum(Rational(0)));
    CHECK_FALSE(repbad.matches);
}

TEST_CASE("genus-2 splitting preconditions") {
    auto c1 = catalog_get("C1").genus2.value();  // y^2 = x^5 + 1 is NOT preserved by (1/x, y/x^3)
    RingPtr xy = make_ring({"x", "y"});
    RationalMap inv{MultiPoly::constant(xy, Rational(1)), MultiPoly::variable(xy, "x"),
                    MultiPoly::variable(xy, "y"), MultiPoly::variable(xy, "x", 3)};
    CHECK_THROWS_AS(
        verify_genus2_split(c1, inv, CycloNum(Rational(0)), CycloNum(Rational(0))),
        precondition_error);
    // a hyperelliptic involution (x, y) -> (x, -y) is rejected: it acts
    // trivially on the Jacobian quotient construction used here
    RationalMap hyp{MultiPoly::variable(xy, "x"), MultiPoly::constant(xy, Rational(1)),
                    -MultiPoly::variable(xy, "y"), MultiPoly::constant(xy, Rational(1))};
    CHECK_THROWS_AS(
        verify_genus2_split(catalog_get("C2").genus2.value(), hyp, CycloNum(Rational(0)),
                            CycloNum(Rational(0))),
        precondition_error);
}

TEST_CASE("two-power-pencil criterion") {
    RingPtr ur = make_ring({"u0", "u1", "u2"});
    auto v = [&](const char* n, unsigned p = 1) { return MultiPoly::variable(ur, n, p); };
    // F = u0^6 + u1^6 admits (u0^3)^2 + (u1^2)^3 and (u1^3)^2 + (u0^2)^3,
    // but the powered forms coincide as a set: the span has rank 2, so the
    // two decompositions describe the same pencil and the criterion fails.
    MultiPoly F = v("u0", 6) + v("u1", 6);
    KulikovReport r = verify_kulikov(F, v("u0", 3), v("u1", 2), v("u1", 3), v("u0", 2), 2, 3);
    CHECK(r.identity1);
    CHECK(r.identity2);
    CHECK(r.span_rank == 2);
    CHECK_FALSE(r.verdict);

    // degenerate: the same decomposition twice has span rank 2
    KulikovReport same =
        verify_kulikov(F, v("u0", 3), v("u1", 2), v("u0", 3), v("u1", 2), 2, 3);
    CHECK(same.identity1);
    CHECK(same.span_rank == 2);
    CHECK_FALSE(same.verdict);

    // a wrong identity is flagged
    KulikovReport wrong =
        verify_kulikov(F + v("u2", 6), v("u0", 3), v("u1", 2), v("u1", 3), v("u0", 2), 2, 3);
    CHECK_FALSE(wrong.identity1);
    CHECK_FALSE(wrong.verdict);

    CHECK_THROWS_AS(verify_kulikov(F, v("u0", 3), v("u1", 3), v("u1", 3), v("u0", 3), 2, 2),
                    precondition_error);  // gcd(a,b) != 1
}

TEST_CASE("two-power identities are scale-invariant in the expected way") {
    // G -> lambda^b G, H -> lambda^a H rescales F by lambda^{ab}; with the
    // same lambda applied to F the identity persists.
    RingPtr ur = make_ring({"u0", "u1", "u2"});
    auto v = [&](const char* n, unsigned p = 1) { return MultiPoly::variable(ur, n, p); };
    MultiPoly G = v("u0", 3), H = v("u1", 2);
    MultiPoly G2 = v("u1", 3), H2 = v("u0", 2);
    CycloNum lam(Rational(2));
    MultiPoly F = v("u0", 6) + v("u1", 6);
    MultiPoly Fs = F * MultiPoly::constant(ur, lam.pow(6));
    KulikovReport r = verify_kulikov(Fs, G * lam.pow(3), H * lam.pow(2),
                                     G2 * lam.pow(3), H2 * lam.pow(2), 2, 3);
    CHECK(r.identity1);
    CHECK(r.identity2);
}

TEST_CASE("two-power-pencil criterion: positive case from the sextic catalog entry") {
    // The corrected branch sextic carries two genuinely distinct
    // square-plus-cube pencils; the searcher recovers them and the
    // criterion certifies a surface image.
    MultiPoly F = catalog_get("tokunaga_F").poly_corrected.value();
    auto res = find_two_power_decomposition(F, 2, 3);
    REQUIRE(res.found.size() >= 2);
    bool certified = false;
    for (size_t i = 0; i < res.found.size() && !certified; ++i)
        for (size_t j = i + 1; j < res.found.size() && !certified; ++j) {
            KulikovReport r = verify_kulikov(F, res.found[i].G, res.found[i].H,
                                             res.found[j].G, res.found[j].H, 2, 3);
            if (r.verdict) certified = true;
        }
    CHECK(certified);
}

TEST_CASE("coefficient span rank") {
    RingPtr ur = make_ring({"u0", "u1", "u2"});
    auto v = [&](const char* n, unsigned p = 1) { return MultiPoly::variable(ur, n, p); };
    CHECK(coefficient_span_rank({v("u0"), v("u1"), v("u0") + v("u1")}) == 2);
    CHECK(coefficient_span_rank({v("u0"), v("u1"), v("u2")}) == 3);
    CHECK(coefficient_span_rank({MultiPoly(ur)}) == 0);
    // zeta multiples are dependent over Q(zeta)
    MultiPoly a = v("u0");
    MultiPoly b = v("u0") * MultiPoly::constant(ur, CycloNum::zeta(3));
    CHECK(coefficient_span_rank({a, b}) == 1);
}
