#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "albtwist/cover.hpp"
#include "albtwist/curves.hpp"

namespace albtwist {

// Modular arithmetic helpers (p < 2^31 so products fit in 64 bits).
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t p);

// Smallest element of F_p of exact multiplicative order n; requires
// p = 1 (mod n). All other order-n elements are recorded for the
// ambiguity note in PrimeProbe.
std::uint64_t smallest_root_of_unity(std::uint64_t p, unsigned n);

std::uint64_t reduce_rational(const Rational& r, std::uint64_t p);
// Reduce via zeta -> root (an order-n element of F_p).
std::uint64_t reduce_cyclo(const CycloNum& c, std::uint64_t p, std::uint64_t root);

struct CurveCount {
    std::uint64_t naive = 0;     // affine double loop (parallel kernel) + infinity
    std::uint64_t char_sum = 0;  // serial quadratic-character reference
    bool agree = false;
};

// Projective point count of y^2 = q(x) over F_p from the reduced
// coefficients of q (constant term first). Degree 3 adds one point at
// infinity; degree 5/6 counts follow the same affine + infinity rule.
CurveCount count_hyperelliptic(const std::vector<std::uint64_t>& q_mod, std::uint64_t p);

// Number of affine zeros of a polynomial in at most 3 variables over F_p.
std::uint64_t count_affine_zeros(const MultiPoly& f, std::uint64_t p, std::uint64_t root);

struct PrimeProbe {
    std::uint64_t p = 0;
    unsigned n = 1;
    std::uint64_t root_of_unity = 1;
    std::vector<std::uint64_t> other_roots;  // ambiguity record
    std::map<std::string, std::uint64_t> counts;
    bool counting_paths_agree = true;
    bool twist_checks_passed = true;
    std::uint64_t twist_samples = 0;
};

PrimeProbe probe_curve(const EllipticCurveData& e, std::uint64_t p, unsigned n);
PrimeProbe probe_genus2(const Genus2CurveData& c, std::uint64_t p, unsigned n);
PrimeProbe probe_poly(const MultiPoly& f, std::uint64_t p, unsigned n);

// Specializes tower coordinates over F_p and checks the reduced twist
// identity f(x1,y1) z^n = f(x,y) on sampled points with nonzero
// denominators.
PrimeProbe probe_tower(const CoverSpec& spec, unsigned m, std::uint64_t p, unsigned samples,
                       std::uint64_t seed);

}  // namespace albtwist
