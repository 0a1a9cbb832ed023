#include "albtwist/curves.hpp"

namespace albtwist {

namespace {
const CycloNum kTwo{Rational(2)}, kThree{Rational(3)}, kFour{Rational(4)};
}

CycloNum EllipticCurveData::discriminant() const {
    CycloNum b2 = a1 * a1 + kFour * a2;
    CycloNum b4 = kTwo * a4 + a1 * a3;
    CycloNum b6 = a3 * a3 + kFour * a6;
    CycloNum b8 = (b2 * b6 - b4 * b4) / kFour;
    return -(b2 * b2) * b8 - CycloNum(Rational(8)) * b4.pow(3) -
           CycloNum(Rational(27)) * b6 * b6 + CycloNum(Rational(9)) * b2 * b4 * b6;
}

CycloNum EllipticCurveData::j_invariant() const {
    CycloNum b2 = a1 * a1 + kFour * a2;
    CycloNum b4 = kTwo * a4 + a1 * a3;
    CycloNum c4 = b2 * b2 - CycloNum(Rational(24)) * b4;
    return c4.pow(3) / discriminant();
}

MultiPoly EllipticCurveData::equation() const {
    RingPtr r = make_ring({"x", "y"});
    MultiPoly x = MultiPoly::variable(r, "x"), y = MultiPoly::variable(r, "y");
    return y * y + x * y * MultiPoly::constant(r, a1) + y * MultiPoly::constant(r, a3) -
           x.pow(3) - x * x * MultiPoly::constant(r, a2) - x * MultiPoly::constant(r, a4) -
           MultiPoly::constant(r, a6);
}

MultiPoly EllipticCurveData::rhs_poly() const {
    if (!a1.is_zero() || !a3.is_zero())
        throw precondition_error("rhs_poly requires a1 = a3 = 0");
    RingPtr r = make_ring({"x"});
    MultiPoly x = MultiPoly::variable(r, "x");
    return x.pow(3) + x * x * MultiPoly::constant(r, a2) + x * MultiPoly::constant(r, a4) +
           MultiPoly::constant(r, a6);
}

EllipticCurveData EllipticCurveData::make(std::string label, CycloNum a1, CycloNum a2,
                                          CycloNum a3, CycloNum a4, CycloNum a6) {
    EllipticCurveData e{std::move(label), std::move(a1), std::move(a2), std::move(a3),
                        std::move(a4), std::move(a6)};
    if (e.discriminant().is_zero())
        throw precondition_error("elliptic curve " + e.label + " has zero discriminant");
    return e;
}

EllipticCurveData EllipticCurveData::make_simple(std::string label, Rational a2, Rational a4,
                                                 Rational a6) {
    return make(std::move(label), CycloNum(), CycloNum(a2), CycloNum(), CycloNum(a4),
                CycloNum(a6));
}

Genus2CurveData Genus2CurveData::make(std::string label, MultiPoly q) {
    for (const auto& v : q.ring()->vars())
        if (v != "x" && q.involves(v))
            throw precondition_error("genus-2 right-hand side must be univariate in x");
    long d = q.degree_in("x");
    if (d != 5 && d != 6)
        throw precondition_error("genus-2 right-hand side must have degree 5 or 6");
    MultiPoly g = univariate_gcd(q, q.derivative("x"), "x");
    if (g.degree_in("x") > 0)
        throw precondition_error("genus-2 right-hand side must be squarefree");
    return {std::move(label), q.in_ring(make_ring({"x"}))};
}

RationalMap RationalMap::linear(const CycloNum& cx, const CycloNum& cy) {
    RingPtr r = make_ring({"x", "y"});
    MultiPoly one = MultiPoly::constant(r, Rational(1));
    return {MultiPoly::variable(r, "x") * MultiPoly::constant(r, cx), one,
            MultiPoly::variable(r, "y") * MultiPoly::constant(r, cy), one};
}

RationalMap RationalMap::identity() {
    return linear(CycloNum(Rational(1)), CycloNum(Rational(1)));
}

}  // namespace albtwist
