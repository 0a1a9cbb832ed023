#pragma once

#include <string>
#include <vector>

#include "albtwist/multipoly.hpp"

namespace albtwist {

enum class BranchLocus { CurveOnly, CurveAndLineAtInfinity };

/// The cyclic cover X_n : w^n = f(x,y), together with its weighted
/// projective model u3^n = u0^n0 * F(u0,u1,u2).
struct CoverSpec {
    unsigned n = 0;
    MultiPoly f;          // in (x, y)
    unsigned r = 0;       // deg f
    unsigned e = 0;       // ceil(r/n); u3 carries weight e
    unsigned n0 = 0;      // n*e - r
    MultiPoly F;          // homogenization, F(1,x,y) = f
    MultiPoly affine_eq;  // w^n - f
    MultiPoly weighted_eq;
    BranchLocus branch_locus = BranchLocus::CurveOnly;
};

struct TwistPoint {
    MultiPoly x, y;
    MultiPoly z_num, z_den;  // third coordinate as a fraction
};

struct TowerPresentation {
    unsigned n = 0;
    unsigned m = 0;
    MultiPoly f;  // base curve polynomial in (x, y)
    RingPtr ring;  // shared ring: x, y, z, x_i, y_i, w_i, z_i
    RelationSet product_relations;        // w_i^n = f(x_i, y_i)
    std::vector<MultiPoly> quotient_relations;  // z_i^n - f_1^(n-1) f_(i+1)
    MultiPoly twist_eq;                   // f(x1,y1) z^n - f(x,y)
    std::vector<TwistPoint> points;
};

struct CocycleTable {
    unsigned group_order = 0;
    std::vector<unsigned> entries;  // entries[j] = automorphism exponent of a_{gamma^j}
    bool order_check_passed = false;
    bool cocycle_law_passed = false;
    bool inverse_identity_passed = false;
    // powers tau^j that generate a proper subgroup, with their orders
    std::vector<std::pair<unsigned, unsigned>> proper_power_orders;
};

struct PencilSpec {
    MultiPoly F1, F2;  // homogeneous of equal degree s in (u0,u1,u2)
    std::vector<std::pair<Rational, Rational>> points;  // (a_i : b_i)
    std::vector<unsigned> exponents;                    // s_i
    unsigned ell = 0;
    unsigned n = 0;
};

CoverSpec make_cover(const MultiPoly& f, unsigned n);
TowerPresentation build_tower(const CoverSpec& spec, unsigned m);
std::vector<TwistPoint> twist_points(const TowerPresentation& tower);
CocycleTable cocycle(const CoverSpec& spec);

// Assembles f = prod (b_i F1(1,x,y) - a_i F2(1,x,y))^(s_i) and the
// pencil curve equation v2^ell = prod (b_i v0 - a_i v1)^(s_i).
struct PencilFactorResult {
    MultiPoly f;
    MultiPoly d_ell_eq;  // v2^ell - prod(...) over ring (v0, v1, v2)
};
PencilFactorResult pencil_factor(const PencilSpec& p);

}  // namespace albtwist
