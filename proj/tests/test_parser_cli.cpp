#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "albtwist/parser.hpp"

using namespace albtwist;

TEST_CASE("grammar examples") {
    MultiPoly f = parse_poly("y^2-x^3-1");
    CHECK(f.total_degree() == 3);
    CHECK(f.degree_in("y") == 2);
    CHECK(f.coeff({0, 0}) == CycloNum(Rational(-1)));

    // explicit products and rational coefficients
    MultiPoly g = parse_poly("1/2*x*y + 3*x^2 - y");
    CHECK(g.degree_in("x") == 2);
    RingPtr xy = g.ring();
    CHECK(g.coeff({1, 1}) == CycloNum(Rational(1) / Rational(2)));

    // parentheses
    MultiPoly h = parse_poly("(x+y)^2");
    CHECK(h == parse_poly("x^2+2*x*y+y^2"));
    CHECK(parse_poly("-(x-y)") == parse_poly("y-x"));

    // constants
    MultiPoly c = parse_poly("7");
    CHECK(c.is_constant());
    CHECK(c.constant_value() == CycloNum(Rational(7)));
}

TEST_CASE("zeta binds to the ambient order") {
    MultiPoly p3 = parse_poly("zeta*x", 3);
    CHECK(p3.coeff({1}) == CycloNum::zeta(3));
    MultiPoly p4 = parse_poly("zeta^2*x", 4);
    CHECK(p4.coeff({1}) == CycloNum(Rational(-1)));
    // zeta with n = 1 is just 1
    CHECK(parse_poly("zeta", 1).constant_value() == CycloNum(Rational(1)));
    // zeta^3 + zeta^2 + zeta + 1 = 0 for n = 4? No: that is (z^4-1)/(z-1); for
    // n = 4 it equals z^2(z+1)+(z+1) = 0 since z^2 = -1
    CHECK(parse_poly("zeta^3+zeta^2+zeta+1", 4).is_zero());
}

TEST_CASE("variables are collected alphabetically") {
    MultiPoly p = parse_poly("y + x + a");
    CHECK(p.ring()->vars() == std::vector<std::string>{"a", "x", "y"});
}

TEST_CASE("errors carry a column") {
    try {
        parse_poly("x^(3");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("x +"), parse_error);
    CHECK_THROWS_AS(parse_poly("(x"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^-2"), parse_error);
    CHECK_THROWS_AS(parse_poly("x y"), parse_error);  // implicit product rejected
    CHECK_THROWS_AS(parse_poly("2x"), parse_error);
}

TEST_CASE("print-parse round trip on random polynomials") {
    std::mt19937_64 rng(20240820);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<unsigned> expn(0, 4);
    std::uniform_int_distribution<unsigned> nterms(1, 6);
    std::uniform_int_distribution<unsigned> zpow(0, 5);
    RingPtr xy = make_ring({"x", "y"});
    const unsigned order = 6;
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly p(xy);
        unsigned t = nterms(rng);
        for (unsigned k = 0; k < t; ++k) {
            Rational q(coeff(rng), den(rng));
            CycloNum c = CycloNum(q) * CycloNum::zeta(order, zpow(rng));
            p += MultiPoly::variable(xy, "x", expn(rng)) *
                 MultiPoly::variable(xy, "y", expn(rng)) * MultiPoly::constant(xy, c);
        }
        if (p.is_zero()) continue;
        MultiPoly back = parse_poly(p.to_string(), order);
        CHECK(back == p.in_ring(back.ring()));
    }
}
