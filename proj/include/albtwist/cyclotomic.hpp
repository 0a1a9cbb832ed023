#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albtwist/rational.hpp"

namespace albtwist {

unsigned euler_phi(unsigned n);

// Coefficients of the n-th cyclotomic polynomial Phi_n, constant term first,
// degree phi(n), monic.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_n) in the power basis {1, zeta, ..., zeta^(phi(n)-1)}
/// reduced mod Phi_n. Order 1 means a plain rational.
class CycloNum {
  public:
    CycloNum() : order_(1), coeffs_(1, Rational(0)) {}
    explicit CycloNum(const Rational& r) : order_(1), coeffs_(1, r) {}
    explicit CycloNum(long v) : order_(1), coeffs_(1, Rational(v)) {}
    CycloNum(unsigned order, std::vector<Rational> raw_coeffs);

    static CycloNum zeta(unsigned n, unsigned power = 1);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Re-express in Q(zeta_m); requires order() | m.
    CycloNum embedded(unsigned m) const;
    // Drop to the smallest order representation (order 1 when rational).
    CycloNum simplified() const;

    CycloNum operator-() const;
    CycloNum inverse() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
    CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
    CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

    CycloNum pow(unsigned e) const;

    // Canonical textual form, e.g. "2", "-1/3", "1 - 2*zeta^2".
    std::string to_string() const;

  private:
    unsigned order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

enum class CycloOp { Add, Sub, Mul, Div };

// Checked arithmetic entry point: requires equal orders (a rational operand
// of order 1 is accepted against any order).
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);

// Exact square root of a rational value inside Q(zeta_n), when the squarefree
// part is covered by the quadratic subfields of Q(zeta_n) (built from Gauss
// sums, zeta_4 and zeta_8 + zeta_8^-1). Returns nullopt otherwise.
std::optional<CycloNum> cyclo_sqrt_of_rational(const Rational& r, unsigned n);

}  // namespace albtwist
