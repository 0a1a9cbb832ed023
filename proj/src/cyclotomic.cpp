#include "albtwist/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace albtwist {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    Integer ns = sqrt(r.get_num()), ds = sqrt(r.get_den());
    if (ns * ns != r.get_num() || ds * ds != r.get_den()) return std::nullopt;
    return Rational(ns, ds);
}

std::pair<Integer, Rational> squarefree_decompose(const Rational& r) {
    if (sgn(r) == 0) return {Integer(0), Rational(0)};
    // r = num/den = (num*den)/den^2, so only num*den matters for the
    // squarefree part.
    Integer m = r.get_num() * r.get_den();
    Integer sf = 1;
    int sign = sgn(m);
    m = abs(m);
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e % 2) sf *= p;
    }
    sf *= m;  // leftover prime
    // |num*den| = sf * s^2
    Integer s = sqrt(abs(r.get_num() * r.get_den()) / sf);
    Rational root(s, r.get_den());
    root.canonicalize();
    return {sign < 0 ? -sf : sf, root};
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Quotient of univariate integer polynomials, exact division assumed
// (used only for x^n - 1 divided by products of cyclotomics).
std::vector<Integer> exact_div_z(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (size_t qi = q.size(); qi-- > 0;) {
        Integer c = num[qi + den.size() - 1] / den.back();
        q[qi] = c;
        for (size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
    }
    return q;
}

std::vector<Integer> mul_z(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Integer>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Integer> result;
    if (n == 1) {
        result = {Integer(-1), Integer(1)};  // x - 1
    } else {
        // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
        std::vector<Integer> den{Integer(1)};
        for (unsigned d = 1; d < n; ++d) {
            if (n % d) continue;
            // recursive lookup without deadlock: compute inline
            mu.unlock();
            const auto& phid = cyclotomic_polynomial(d);
            mu.lock();
            den = mul_z(den, phid);
        }
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        result = exact_div_z(std::move(num), den);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

namespace {

// Reduce a rational polynomial in zeta (coefficient vector, any length)
// mod Phi_n, returning exactly phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> c, unsigned n) {
    const auto& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    for (size_t i = c.size(); i-- > deg;) {
        Rational lead = c[i];
        if (sgn(lead) == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < deg; ++j) c[i - deg + j] -= lead * Rational(phi[j]);
    }
    c.resize(deg, Rational(0));
    for (auto& x : c) x.canonicalize();
    return c;
}

}  // namespace

CycloNum::CycloNum(unsigned order, std::vector<Rational> raw_coeffs) : order_(order) {
    if (order == 0) throw precondition_error("cyclotomic order must be >= 1");
    coeffs_ = reduce_mod_phi(std::move(raw_coeffs), order);
}

CycloNum CycloNum::zeta(unsigned n, unsigned power) {
    std::vector<Rational> c(power % n + 1, Rational(0));
    c[power % n] = 1;
    return CycloNum(n, std::move(c));
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw precondition_error("CycloNum is not rational: " + to_string());
    return coeffs_[0];
}

CycloNum CycloNum::embedded(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw precondition_error("cannot embed Q(zeta_" + std::to_string(order_) +
                                                  ") into Q(zeta_" + std::to_string(m) + ")");
    unsigned step = m / order_;
    std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
    return CycloNum(m, std::move(c));
}

CycloNum CycloNum::simplified() const {
    if (order_ == 1) return *this;
    if (is_rational()) return CycloNum(coeffs_[0]);
    // Try proper divisors of the order, smallest first: solve for coefficients
    // against the embedded power basis of the candidate subfield.
    for (unsigned d = 2; d < order_; ++d) {
        if (order_ % d) continue;
        unsigned phid = euler_phi(d), phin = euler_phi(order_);
        // augmented matrix [basis | target]
        std::vector<std::vector<Rational>> m(phin, std::vector<Rational>(phid + 1, Rational(0)));
        for (unsigned j = 0; j < phid; ++j) {
            CycloNum bj = zeta(d, j).embedded(order_);
            for (unsigned i = 0; i < phin; ++i) m[i][j] = bj.coeffs_[i];
        }
        for (unsigned i = 0; i < phin; ++i) m[i][phid] = coeffs_[i];
        // Gaussian elimination
        std::vector<long> pivot_col_of_row;
        unsigned row = 0;
        for (unsigned col = 0; col < phid && row < phin; ++col) {
            unsigned piv = row;
            while (piv < phin && sgn(m[piv][col]) == 0) ++piv;
            if (piv == phin) continue;
            std::swap(m[row], m[piv]);
            Rational inv = 1 / m[row][col];
            for (unsigned j = col; j <= phid; ++j) {
                m[row][j] *= inv;
                m[row][j].canonicalize();
            }
            for (unsigned i = 0; i < phin; ++i) {
                if (i == row || sgn(m[i][col]) == 0) continue;
                Rational f = m[i][col];
                for (unsigned j = col; j <= phid; ++j) {
                    m[i][j] -= f * m[row][j];
                    m[i][j].canonicalize();
                }
            }
            pivot_col_of_row.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (unsigned i = row; i < phin; ++i)
            if (sgn(m[i][phid]) != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rational> small(phid, Rational(0));
        for (unsigned i = 0; i < row; ++i) small[pivot_col_of_row[i]] = m[i][phid];
        CycloNum candidate(d, small);
        if (candidate.embedded(order_) == *this) return candidate;
    }
    return *this;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
unsigned promote_order(unsigned a, unsigned b) { return std::lcm(a, b); }
}  // namespace

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    unsigned n = promote_order(a.order_, b.order_);
    CycloNum x = a.embedded(n), y = b.embedded(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        x.coeffs_[i] += y.coeffs_[i];
        x.coeffs_[i].canonicalize();
    }
    return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    unsigned n = promote_order(a.order_, b.order_);
    CycloNum x = a.embedded(n), y = b.embedded(n);
    std::vector<Rational> c(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (sgn(x.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (sgn(y.coeffs_[j]) == 0) continue;
            c[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return CycloNum(n, std::move(c));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw precondition_error("division by zero in Q(zeta_n)");
    if (order_ == 1) return CycloNum(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] for gcd(this, Phi_n) = 1.
    const auto& phiz = cyclotomic_polynomial(order_);
    std::vector<Rational> r0(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rational(phiz[i]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && sgn(r1.back()) == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // s tracks coefficient of `this`
    auto deg = [](const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (sgn(rem[i]) == 0) continue;
            Rational c = rem[i] / r1.back();
            q[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        while (!s2.empty() && sgn(s2.back()) == 0) s2.pop_back();
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r1.empty()) throw precondition_error("element not invertible mod Phi_n");
    Rational unit = r1[0];
    for (auto& c : s1) c /= unit;
    return CycloNum(order_, std::move(s1));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
    unsigned n = promote_order(a.order_, b.order_);
    CycloNum x = a.embedded(n), y = b.embedded(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        if (x.coeffs_[i] != y.coeffs_[i]) return false;
    return true;
}

CycloNum CycloNum::pow(unsigned e) const {
    CycloNum result{Rational(1)};
    CycloNum base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string CycloNum::to_string() const {
    if (is_rational()) return rat_to_string(coeffs_.empty() ? Rational(0) : coeffs_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (sgn(c) < 0) { out << "-"; c = -c; }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1 && i > 0);
        if (!unit) out << rat_to_string(c);
        if (i > 0) {
            if (!unit) out << "*";
            out << "zeta";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
    if (a.order() != b.order() && a.order() != 1 && b.order() != 1)
        throw precondition_error("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()));
    switch (op) {
        case CycloOp::Add: return a + b;
        case CycloOp::Sub: return a - b;
        case CycloOp::Mul: return a * b;
        case CycloOp::Div:
            if (b.is_zero()) throw precondition_error("division by zero");
            return a / b;
    }
    throw precondition_error("bad op");
}

std::optional<CycloNum> cyclo_sqrt_of_rational(const Rational& r, unsigned n) {
    auto [sf, root] = squarefree_decompose(r);
    if (sf == 0) return CycloNum(Rational(0));
    CycloNum acc{root};
    Integer s = abs(sf);
    bool negative = sgn(sf) < 0;
    // Peel prime factors of the squarefree part.
    for (Integer p = 2; p <= s; ++p) {
        if (s % p != 0) continue;
        s /= p;
        if (p == 2) {
            if (n % 8 != 0) return std::nullopt;
            // sqrt(2) = zeta_8 + zeta_8^-1
            CycloNum z8 = CycloNum::zeta(n, n / 8);
            acc = acc * (z8 + z8.pow(7));
        } else {
            unsigned pu = static_cast<unsigned>(p.get_ui());
            if (n % pu != 0) return std::nullopt;
            // Gauss sum g = sum_t zeta_p^(t^2) satisfies g^2 = (-1)^((p-1)/2) * p.
            CycloNum g{Rational(0)};
            for (unsigned t = 0; t < pu; ++t) g += CycloNum::zeta(n, (n / pu) * ((t * t) % pu));
            acc = acc * g;
            if ((pu - 1) / 2 % 2 == 1) negative = !negative;  // g^2 = -p, flip remaining sign
        }
    }
    if (negative) {
        if (n % 4 != 0) return std::nullopt;
        acc = acc * CycloNum::zeta(n, n / 4);
    }
    return acc;
}

}  // namespace albtwist
