#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albtwist/cover.hpp"
#include "albtwist/parser.hpp"

using namespace albtwist;

TEST_CASE("cover invariants: e, n0, branch locus") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    CoverSpec s2 = make_cover(f, 2);
    CHECK(s2.r == 3);
    CHECK(s2.e == 2);
    CHECK(s2.n0 == 1);
    CHECK(s2.branch_locus == BranchLocus::CurveAndLineAtInfinity);

    CoverSpec s3 = make_cover(f, 3);
    CHECK(s3.e == 1);
    CHECK(s3.n0 == 0);
    CHECK(s3.branch_locus == BranchLocus::CurveOnly);

    MultiPoly sextic = parse_poly("x^6+y^6+1");
    CoverSpec s6 = make_cover(sextic, 6);
    CHECK(s6.e == 1);
    CHECK(s6.n0 == 0);
}

TEST_CASE("cover rejects bad input") {
    CHECK_THROWS_AS(make_cover(parse_poly("x+y"), 1), precondition_error);
    CHECK_THROWS_AS(make_cover(parse_poly("x"), 2), precondition_error);
    CHECK_THROWS_AS(make_cover(parse_poly("x^2+z^2"), 2), precondition_error);
}

TEST_CASE("homogenization satisfies F(1, x, y) = f") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    CoverSpec s = make_cover(f, 2);
    RingPtr xy = make_ring({"x", "y"});
    MultiPoly back = s.F.subst({{"u0", MultiPoly::constant(s.F.ring(), Rational(1))},
                                {"u1", MultiPoly::variable(xy, "x")},
                                {"u2", MultiPoly::variable(xy, "y")}});
    CHECK(back == f.in_ring(back.ring()));
    CHECK(is_homogeneous(s.F).homogeneous);
    CHECK(s.weighted_eq.degree_in("u3") == 2);
    CHECK(s.affine_eq.degree_in("w") == 2);
}

TEST_CASE("tower presentation shape") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    TowerPresentation t = build_tower(make_cover(f, 3), 3);
    CHECK(t.n == 3);
    CHECK(t.m == 3);
    CHECK(t.product_relations.relations().size() == 3);
    CHECK(t.quotient_relations.size() == 2);
    CHECK(t.points.size() == 3);
    // first point is (x1, y1, 1)
    CHECK(t.points[0].z_num == MultiPoly::constant(t.ring, Rational(1)));
    // later points carry w_i / w_1
    CHECK(t.points[1].z_num == MultiPoly::variable(t.ring, "w2"));
    CHECK(t.points[1].z_den == MultiPoly::variable(t.ring, "w1"));
    CHECK(twist_points(t).size() == 3);

    TowerPresentation t1 = build_tower(make_cover(f, 2), 1);
    CHECK(t1.quotient_relations.empty());
    CHECK_THROWS_AS(build_tower(make_cover(f, 2), 0), precondition_error);
}

TEST_CASE("cocycle table") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    CocycleTable tab = cocycle(make_cover(f, 6));
    CHECK(tab.group_order == 6);
    CHECK(tab.order_check_passed);
    CHECK(tab.cocycle_law_passed);
    CHECK(tab.inverse_identity_passed);
    // tau^2 has order 3, tau^3 order 2, tau^4 order 3
    std::vector<std::pair<unsigned, unsigned>> expect{{2, 3}, {3, 2}, {4, 3}};
    CHECK(tab.proper_power_orders == expect);

    CocycleTable tab5 = cocycle(make_cover(f, 5));
    CHECK(tab5.proper_power_orders.empty());  // prime order: no proper powers
}

TEST_CASE("pencil factorization") {
    RingPtr ur = make_ring({"u0", "u1", "u2"});
    PencilSpec p;
    p.F1 = MultiPoly::variable(ur, "u1", 2);
    p.F2 = MultiPoly::variable(ur, "u0", 2) + MultiPoly::variable(ur, "u2", 2);
    p.points = {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(1), Rational(2)}};
    p.exponents = {1, 1, 1};
    p.ell = 3;
    p.n = 6;
    PencilFactorResult res = pencil_factor(p);
    CHECK(res.f.total_degree() == 6);
    CHECK(res.d_ell_eq.degree_in("v2") == 3);
    // f is the product of the three pencil members (u1 -> x, u2 -> y)
    RingPtr xy = make_ring({"x", "y"});
    MultiPoly f1 = MultiPoly::variable(xy, "x", 2);
    MultiPoly f2 = MultiPoly::constant(xy, Rational(1)) + MultiPoly::variable(xy, "y", 2);
    MultiPoly expect = f1 * (f1 - f2) * (MultiPoly::constant(xy, Rational(2)) * f1 - f2);
    CHECK(res.f == expect.in_ring(res.f.ring()));
}

TEST_CASE("pencil divisibility errors name the failed condition") {
    RingPtr ur = make_ring({"u0", "u1", "u2"});
    PencilSpec p;
    p.F1 = MultiPoly::variable(ur, "u1", 2);
    p.F2 = MultiPoly::variable(ur, "u0", 2);
    p.points = {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    p.exponents = {1, 1};
    p.ell = 3;  // 3 does not divide s1 + s2 = 2
    p.n = 6;
    CHECK_THROWS_WITH_AS(pencil_factor(p),
                         doctest::Contains("ell does not divide sum"), precondition_error);
    p.ell = 2;
    p.n = 5;  // 2 does not divide 5
    CHECK_THROWS_WITH_AS(pencil_factor(p), doctest::Contains("ell does not divide n"),
                         precondition_error);
    p.ell = 2;
    p.n = 2;
    PencilSpec bad = p;
    bad.F2 = MultiPoly::variable(ur, "u0", 3);
    CHECK_THROWS_WITH_AS(pencil_factor(bad), doctest::Contains("same degree"),
                         precondition_error);
}
