#pragma once

#include <string>
#include <vector>

#include "albtwist/cover.hpp"
#include "albtwist/curves.hpp"
#include "albtwist/multipoly.hpp"

namespace albtwist {

struct MembershipPointReport {
    size_t index = 0;  // 1-based point index
    bool passes = false;
    size_t rewrite_steps = 0;
};

struct MembershipReport {
    std::vector<MembershipPointReport> points;
    bool all_pass = false;
};

// Each tower point, substituted into the denominator-cleared twist equation,
// must reduce to zero under the tower's product relations.
MembershipReport verify_membership(const TowerPresentation& tower);

// Checks a single candidate point against the tower's twist equation.
MembershipPointReport verify_point(const TowerPresentation& tower, const TwistPoint& pt,
                                   size_t index);

struct DescentReport {
    std::vector<bool> relation_ok;
    bool all_pass = false;
};

// Substitutes the product-of-roots expression into each quotient relation
// and checks the result reduces to zero.
DescentReport verify_descent(const TowerPresentation& tower);

struct CmReport {
    bool on_curve = false;       // the map preserves y^2 = q(x)
    unsigned observed_order = 0;  // 0 when no power up to the claim is the identity
    bool order_matches = false;
    bool passes = false;
};

// Verifies that `map` is an automorphism of the hyperelliptic model
// y^2 = q(x) of exact order `claimed_order`.
CmReport verify_cm_automorphism(const MultiPoly& q, const RationalMap& map,
                                unsigned claimed_order);
CmReport verify_cm_automorphism(const EllipticCurveData& e, const RationalMap& map,
                                unsigned claimed_order);
CmReport verify_cm_automorphism(const Genus2CurveData& c, const RationalMap& map,
                                unsigned claimed_order);

struct IsogenyQuotient {
    Rational kernel_x;  // x-coordinate of (a generator of) the kernel
    Rational quotient_a4, quotient_a6;  // quotient in short form y^2 = x^3 + a4 x + a6
    Rational quotient_j;
    bool j_match = false;
};

struct IsogenyReport {
    unsigned ell = 0;
    Rational j_input;
    std::vector<IsogenyQuotient> quotients;
    bool any_match = false;
    std::string verdict;  // "self-isogeny evidence" or "no evidence at this degree"
};

// Enumerates rational ell-kernels from the division polynomial and compares
// quotient j-invariants with the input curve's. Evidence only, never proof.
IsogenyReport verify_isogeny_cm(const EllipticCurveData& e, unsigned ell);

struct SplitReport {
    EllipticCurveData quotient_plus, quotient_minus;
    CycloNum j_plus, j_minus;
    bool matches = false;  // {j_plus, j_minus} == {j1_expected, j2_expected} as sets
};

// Splits Jac of y^2 = q(x) (deg q = 5) along the involution
// (x, y) -> (1/x, y/x^3), returning the two elliptic quotients.
SplitReport verify_genus2_split(const Genus2CurveData& c, const RationalMap& involution,
                                const CycloNum& j1_expected, const CycloNum& j2_expected);

struct KulikovReport {
    bool identity1 = false, identity2 = false;
    unsigned span_rank = 0;
    bool verdict = false;
    bool surface_image = false;  // set when the verdict certifies a surface image
};

// Two-pencil criterion: F = G1^a + H1^b = G2^a + H2^b exactly, and the span
// of the four forms has rank >= 3 (the pencils differ).
KulikovReport verify_kulikov(const MultiPoly& F, const MultiPoly& G1, const MultiPoly& H1,
                             const MultiPoly& G2, const MultiPoly& H2, unsigned a, unsigned b);

// Helpers shared with other modules.
// Evaluates P at the rational map, returning numerator and denominator.
std::pair<MultiPoly, MultiPoly> eval_rational(const MultiPoly& P, const RationalMap& m);
RationalMap compose(const RationalMap& outer, const RationalMap& inner, const MultiPoly& q);
unsigned coefficient_span_rank(const std::vector<MultiPoly>& polys);

}  // namespace albtwist
