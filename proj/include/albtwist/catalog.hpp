#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "albtwist/curves.hpp"
#include "albtwist/multipoly.hpp"

namespace albtwist {

enum class EntryKind { Elliptic, Genus2, Polynomial };

/// A named built-in object. When a published form needed correction, the
/// entry stores both (the published form verbatim plus the corrected form)
/// and carries a caveat explaining the discrepancy.
struct CatalogEntry {
    std::string key;
    EntryKind kind = EntryKind::Polynomial;
    std::optional<EllipticCurveData> elliptic;
    std::optional<EllipticCurveData> elliptic_corrected;
    std::optional<Genus2CurveData> genus2;
    std::optional<MultiPoly> poly;
    std::optional<MultiPoly> poly_corrected;
    std::string note;
    std::vector<std::string> caveats;
};

const CatalogEntry& catalog_get(const std::string& key);
std::vector<std::string> catalog_keys();

// The projective dual of a smooth plane cubic in (u0, u1, u2): the sextic in
// the dual coordinates (v0, v1, v2) vanishing exactly on tangent lines
// (v0:v1:v2) of the cubic. Computed as the discriminant of the restriction
// of the cubic to a varying line, with the extraneous v2^6 factor removed
// by exact division.
MultiPoly dual_cubic(const MultiPoly& F3);

// Smoothness certificate used by dual_cubic (resultant/gcd elimination over
// randomly sheared coordinates); exposed for testing.
bool cubic_is_smooth(const MultiPoly& F3);

struct SearchBounds {
    long coeff_min = -4;
    long coeff_max = 4;
    unsigned ambient_order = 12;  // field Q(zeta_order) for the a-th root
    bool parallel = true;
    std::uint64_t filter_prime = 1000003;
};

struct Decomposition {
    MultiPoly G, H;  // F = G^a + H^b
};

struct DecompositionSearchResult {
    std::vector<Decomposition> found;
    std::uint64_t candidates_tested = 0;
    bool exhausted_bounds = false;  // true when the lattice was fully swept
};

// Searches integer-lattice candidates H (deg F / b) and tests whether
// F - H^b is an exact a-th power over Q(zeta_ambient). Every returned pair
// satisfies F = G^a + H^b exactly (re-expanded).
DecompositionSearchResult find_two_power_decomposition(const MultiPoly& F, unsigned a,
                                                       unsigned b,
                                                       const SearchBounds& bounds = {});

// Runs the cheap structural checks on every catalog entry (automorphism
// substitutions, nonzero discriminants). Returns false with a message on the
// first failure.
bool catalog_selfcheck(std::string* failure = nullptr);

}  // namespace albtwist
