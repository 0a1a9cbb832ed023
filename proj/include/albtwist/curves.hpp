#pragma once

#include <string>

#include "albtwist/multipoly.hpp"

namespace albtwist {

/// Elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with exact
/// (typically rational) coefficients.
struct EllipticCurveData {
    std::string label;
    CycloNum a1, a2, a3, a4, a6;

    CycloNum discriminant() const;
    CycloNum j_invariant() const;
    // y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 over ring (x, y).
    MultiPoly equation() const;
    // Right-hand side as a polynomial in x; requires a1 = a3 = 0.
    MultiPoly rhs_poly() const;

    static EllipticCurveData make(std::string label, CycloNum a1, CycloNum a2, CycloNum a3,
                                  CycloNum a4, CycloNum a6);
    static EllipticCurveData make_simple(std::string label, Rational a2, Rational a4, Rational a6);
};

/// Hyperelliptic genus-2 curve y^2 = q(x), deg q in {5, 6}, q squarefree.
struct Genus2CurveData {
    std::string label;
    MultiPoly q;  // univariate in x

    static Genus2CurveData make(std::string label, MultiPoly q);
};

/// Coordinate map (x, y) -> (x_num/x_den, y_num/y_den) over ring (x, y).
struct RationalMap {
    MultiPoly x_num, x_den, y_num, y_den;

    static RationalMap linear(const CycloNum& cx, const CycloNum& cy);  // (cx*x, cy*y)
    static RationalMap identity();
};

}  // namespace albtwist
