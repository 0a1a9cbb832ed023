#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace albtwist {

// Exact rational arithmetic. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" or "p" form.
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Exact square root of a rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

// r = sign * squarefree * square; returns (sign*squarefree, sqrt(square)).
// For r = 0 returns (0, 0).
std::pair<Integer, Rational> squarefree_decompose(const Rational& r);

}  // namespace albtwist
