#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "albtwist/cyclotomic.hpp"

namespace albtwist {

using Exponents = std::vector<unsigned>;

// Graded-lexicographic order: compare total degree first, then exponents
// left to right (earlier ring variables are "bigger").
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Ring {
  public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    const std::vector<std::string>& vars() const { return vars_; }
    size_t arity() const { return vars_.size(); }
    std::optional<size_t> index_of(const std::string& name) const;

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

/// Sparse multivariate polynomial over Q(zeta_n): a map from exponent
/// vectors to nonzero coefficients. Immutable in spirit; all operations
/// return new values.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, CycloNum, GradedLexLess>;

    MultiPoly() : ring_(make_ring({})) {}  // zero in the empty ring
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    static MultiPoly constant(RingPtr ring, const CycloNum& c);
    static MultiPoly constant(RingPtr ring, const Rational& c) { return constant(ring, CycloNum(c)); }
    static MultiPoly variable(RingPtr ring, const std::string& name, unsigned power = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycloNum constant_value() const;  // requires is_constant (zero counts)
    long total_degree() const;        // -1 for zero polynomial
    long degree_in(const std::string& var) const;
    bool involves(const std::string& var) const { return degree_in(var) > 0; }
    CycloNum coeff(const Exponents& e) const;
    // Leading term under graded-lex; requires nonzero.
    std::pair<Exponents, CycloNum> leading_term() const;

    void add_term(const Exponents& e, const CycloNum& c);  // used by builders

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const CycloNum& c) const;
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
    MultiPoly pow(unsigned e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Simultaneous substitution, fully expanded. Unknown variable -> error.
    MultiPoly subst(const std::map<std::string, MultiPoly>& assignment) const;
    MultiPoly subst(const std::map<std::string, CycloNum>& assignment) const;

    MultiPoly derivative(const std::string& var) const;
    // Move this polynomial into a ring containing at least its variables.
    MultiPoly in_ring(const RingPtr& bigger) const;

    // Coefficients of powers of `var`: result[k] has the coefficient of
    // var^k (var itself removed from the exponent, same ring).
    std::vector<MultiPoly> coeffs_in(const std::string& var) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    TermMap terms_;
};

// Ring of the union of both variable sets (a's order first, then b's extras).
RingPtr merged_ring(const RingPtr& a, const RingPtr& b);
// Promote both operands into a common ring before mixed-ring arithmetic.
std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);

struct is_homogeneous_report {
    bool homogeneous = false;
    long degree = -1;                      // when homogeneous
    std::map<long, size_t> terms_by_degree;  // per-term degree census otherwise
};

MultiPoly homogenize(const MultiPoly& f, const std::string& new_var);
MultiPoly dehomogenize(const MultiPoly& f, const std::string& var);
is_homogeneous_report is_homogeneous(const MultiPoly& p);

// Sylvester-determinant resultant eliminating `var`. Both inputs must have
// positive degree in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// g with g^k = p, if one exists over the coefficient field extended to
// Q(zeta_order): the leading coefficient root is searched among rational
// k-th roots, and for k=2 additionally among square roots of rationals
// available in Q(zeta_order).
std::optional<MultiPoly> perfect_power_root(const MultiPoly& p, unsigned k, unsigned order);

// gcd of two polynomials univariate in `var` with coefficients free of any
// other ring variable; monic result.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& var);

/// Triangular rewrite system v_i^{e_i} = g_i: rewrite variables pairwise
/// distinct and absent from every right-hand side.
class RelationSet {
  public:
    struct Relation {
        std::string var;
        unsigned exponent;
        MultiPoly rhs;
    };

    void add(const std::string& var, unsigned exponent, MultiPoly rhs);
    const std::vector<Relation>& relations() const { return rels_; }

  private:
    std::vector<Relation> rels_;
};

struct NormalFormResult {
    MultiPoly value;
    size_t rewrite_steps = 0;
};

NormalFormResult normal_form_traced(const MultiPoly& p, const RelationSet& rels);
MultiPoly normal_form(const MultiPoly& p, const RelationSet& rels);

}  // namespace albtwist
