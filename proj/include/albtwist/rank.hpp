#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albtwist/multipoly.hpp"

namespace albtwist {

/// User-supplied factorization f = f_1^{m_1} ... f_d^{m_d} of a cover's
/// branch polynomial. The product is re-expanded and checked on construction.
struct FactoredCurve {
    std::vector<std::pair<MultiPoly, unsigned>> factors;
    unsigned n = 0;   // cover degree
    unsigned n0 = 0;  // from the CoverSpec
    unsigned r = 0;   // total degree of the product
    std::vector<unsigned> factor_degrees;
    unsigned irreducibility_gcd = 0;  // gcd(n0, m_1, ..., m_d)

    static FactoredCurve make(std::vector<std::pair<MultiPoly, unsigned>> factors,
                              const MultiPoly& expected_product, unsigned n, unsigned n0);
};

struct DimensionBound {
    unsigned lower = 0;  // always 0
    unsigned upper = 0;
};

// Albanese-dimension bound: (n-1)(sum r_i - 2)/2 when n | r, else
// (n-1)(sum r_i - 1)/2. Requires gcd(n0, m_i) = 1.
DimensionBound albanese_dim_bound(const FactoredCurve& fc);

enum class AlbaneseBlock { E_rho, E_i, J_C1, J_C2, E_1, E_2 };

std::string block_name(AlbaneseBlock b);

struct AlbaneseStructure {
    unsigned n = 0;
    unsigned d = 0;
    std::optional<unsigned> n1, n2;  // only for n = 8, 12
    std::vector<std::pair<AlbaneseBlock, unsigned>> blocks;  // (block, exponent)
    bool assumption1 = false;    // user-asserted
    bool surface_image = false;  // user-asserted or Kulikov-certified
    std::string describe() const;
};

AlbaneseStructure albanese_structure(unsigned n, unsigned d,
                                     std::optional<unsigned> n1 = std::nullopt,
                                     std::optional<unsigned> n2 = std::nullopt);

// Z-rank of End of the block product: sum of rho_b * e_b^2 over pairwise
// non-isogenous blocks, with J(C2) first split into E_1 x E_2.
unsigned endo_rank(const AlbaneseStructure& s);

// The published constant: 2 d^2 for n in {3,4,5,6,10}; d^2 - 8 n1 n2 for
// n in {8,12}. Reproduced verbatim, no corrections applied.
long rank_constant(unsigned n, unsigned d, std::optional<unsigned> n1 = std::nullopt,
                   std::optional<unsigned> n2 = std::nullopt);

enum class CrossCheck { Consistent, PublishedExceedsComputation, ComputationExceedsPublished };

struct RankPrediction {
    unsigned m = 0, n = 0, d = 0;
    std::optional<unsigned> n1, n2;
    long c_n = 0;
    long published_rank = 0;         // m * c_n
    bool equality_holds = true;  // false exactly for n = 8
    unsigned endo_rank_per_copy = 0;
    long endo_rank_path = 0;  // m * endo_rank
    CrossCheck cross_check = CrossCheck::Consistent;
    std::string torsion_note;  // uncomputed symbolic summand
    bool conditional = true;   // until assumption1 and surface_image are asserted
};

RankPrediction predict_rank(unsigned m, unsigned n, unsigned d,
                            std::optional<unsigned> n1 = std::nullopt,
                            std::optional<unsigned> n2 = std::nullopt,
                            bool assumption1 = false, bool surface_image = false);

}  // namespace albtwist
