#include "albtwist/rank.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace albtwist {

FactoredCurve FactoredCurve::make(std::vector<std::pair<MultiPoly, unsigned>> factors,
                                  const MultiPoly& expected_product, unsigned n, unsigned n0) {
    if (factors.empty()) throw precondition_error("at least one factor required");
    FactoredCurve fc;
    fc.n = n;
    fc.n0 = n0;
    MultiPoly prod(factors.front().first.ring());
    bool first = true;
    unsigned g = n0;
    for (auto& [fi, mi] : factors) {
        if (mi < 1) throw precondition_error("factor multiplicities must be >= 1");
        long deg = fi.total_degree();
        if (deg < 1) throw precondition_error("factors must be non-constant");
        fc.factor_degrees.push_back(static_cast<unsigned>(deg));
        fc.r += static_cast<unsigned>(deg) * mi;
        g = std::gcd(g, mi);
        MultiPoly p = fi.pow(mi);
        prod = first ? p : prod * p;
        first = false;
    }
    if (prod != expected_product)
        throw precondition_error("factor product does not expand to the supplied polynomial");
    fc.irreducibility_gcd = g;
    fc.factors = std::move(factors);
    return fc;
}

DimensionBound albanese_dim_bound(const FactoredCurve& fc) {
    if (fc.irreducibility_gcd != 1)
        throw precondition_error("cover may be reducible; bound not asserted");
    unsigned long sum_ri =
        std::accumulate(fc.factor_degrees.begin(), fc.factor_degrees.end(), 0ul);
    unsigned long twice =
        (fc.n - 1) * (fc.r % fc.n == 0 ? sum_ri - 2 : sum_ri - 1);
    if (twice % 2 != 0)
        throw precondition_error("dimension bound is a half-integer; inputs inconsistent");
    return {0, static_cast<unsigned>(twice / 2)};
}

std::string block_name(AlbaneseBlock b) {
    switch (b) {
        case AlbaneseBlock::E_rho: return "E_rho";
        case AlbaneseBlock::E_i: return "E_i";
        case AlbaneseBlock::J_C1: return "J(C1)";
        case AlbaneseBlock::J_C2: return "J(C2)";
        case AlbaneseBlock::E_1: return "E1";
        case AlbaneseBlock::E_2: return "E2";
    }
    return "?";
}

std::string AlbaneseStructure::describe() const {
    std::string s;
    for (const auto& [b, e] : blocks) {
        if (!s.empty()) s += " x ";
        s += block_name(b);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "(trivial)" : s;
}

AlbaneseStructure albanese_structure(unsigned n, unsigned d, std::optional<unsigned> n1,
                                     std::optional<unsigned> n2) {
    if (n == 2)
        throw precondition_error(
            "n = 2 not supported: the double cover factors through a pencil and its "
            "Albanese variety is trivial");
    static const std::vector<unsigned> supported{3, 4, 5, 6, 8, 10, 12};
    if (std::find(supported.begin(), supported.end(), n) == supported.end())
        throw precondition_error("unsupported cover degree n = " + std::to_string(n) +
                                 "; supported: 3, 4, 5, 6, 8, 10, 12");
    if ((n == 5 || n == 8 || n == 10 || n == 12) && d % 2 != 0)
        throw precondition_error("the dimension for n = " + std::to_string(n) +
                                 " is an even integer; got d = " + std::to_string(d));
    AlbaneseStructure s;
    s.n = n;
    s.d = d;
    if (n == 8 || n == 12) {
        if (!n1 || !n2) throw precondition_error("n = 8, 12 require the splitting (n1, n2)");
        if (*n1 + *n2 != d / 2)
            throw precondition_error("splitting must satisfy n1 + n2 = d/2");
        s.n1 = n1;
        s.n2 = n2;
    } else if (n1 || n2) {
        throw precondition_error("(n1, n2) only apply to n = 8, 12");
    }
    auto push = [&](AlbaneseBlock b, unsigned e) {
        if (e > 0) s.blocks.emplace_back(b, e);
    };
    switch (n) {
        case 3:
        case 6: push(AlbaneseBlock::E_rho, d); break;
        case 4: push(AlbaneseBlock::E_i, d); break;
        case 5:
        case 10: push(AlbaneseBlock::J_C1, d / 2); break;
        case 8:
            push(AlbaneseBlock::J_C2, *n1);
            push(AlbaneseBlock::E_i, 2 * *n2);
            break;
        case 12:
            push(AlbaneseBlock::E_i, 2 * *n1);
            push(AlbaneseBlock::E_rho, 2 * *n2);
            break;
    }
    return s;
}

unsigned endo_rank(const AlbaneseStructure& s) {
    // J(C2) is expanded to E1 x E2 before summing; the blocks are then
    // treated as pairwise non-isogenous, so cross-block Hom contributes 0
    // and the total is sum of rho_b * e_b^2.
    std::map<AlbaneseBlock, unsigned> exps;
    for (const auto& [b, e] : s.blocks) {
        if (b == AlbaneseBlock::J_C2) {
            exps[AlbaneseBlock::E_1] += e;
            exps[AlbaneseBlock::E_2] += e;
        } else {
            exps[b] += e;
        }
    }
    auto rho = [](AlbaneseBlock b) -> unsigned {
        switch (b) {
            case AlbaneseBlock::J_C1: return 4;
            default: return 2;
        }
    };
    unsigned total = 0;
    for (const auto& [b, e] : exps) total += rho(b) * e * e;
    return total;
}

long rank_constant(unsigned n, unsigned d, std::optional<unsigned> n1,
                   std::optional<unsigned> n2) {
    AlbaneseStructure s = albanese_structure(n, d, n1, n2);  // validates inputs
    switch (n) {
        case 3:
        case 4:
        case 5:
        case 6:
        case 10: return 2l * d * d;
        case 8:
        case 12: return static_cast<long>(d) * d - 8l * *s.n1 * *s.n2;
    }
    throw precondition_error("unsupported cover degree");
}

RankPrediction predict_rank(unsigned m, unsigned n, unsigned d, std::optional<unsigned> n1,
                            std::optional<unsigned> n2, bool assumption1, bool surface_image) {
    if (m < 1) throw precondition_error("tower length m must be >= 1");
    AlbaneseStructure s = albanese_structure(n, d, n1, n2);
    s.assumption1 = assumption1;
    s.surface_image = surface_image;
    RankPrediction p;
    p.m = m;
    p.n = n;
    p.d = d;
    p.n1 = s.n1;
    p.n2 = s.n2;
    p.c_n = rank_constant(n, d, n1, n2);
    p.published_rank = static_cast<long>(m) * p.c_n;
    p.equality_holds = (n != 8);
    p.endo_rank_per_copy = endo_rank(s);
    p.endo_rank_path = static_cast<long>(m) * p.endo_rank_per_copy;
    if (p.published_rank == p.endo_rank_path)
        p.cross_check = CrossCheck::Consistent;
    else if (p.published_rank > p.endo_rank_path)
        p.cross_check = CrossCheck::PublishedExceedsComputation;
    else
        p.cross_check = CrossCheck::ComputationExceedsPublished;
    p.torsion_note = "rank statement holds modulo the finite torsion summand Alb[m](k)";
    p.conditional = !(assumption1 && surface_image);
    return p;
}

}  // namespace albtwist
