#include "albtwist/probe.hpp"

#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace albtwist {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw precondition_error("division by zero mod p");
    return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t smallest_root_of_unity(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw precondition_error("p must be prime");
    if (n < 1 || (p - 1) % n != 0)
        throw precondition_error("p = " + std::to_string(p) + " is not 1 mod n = " +
                                 std::to_string(n));
    for (std::uint64_t g = 1; g < p; ++g) {
        if (pow_mod(g, n, p) != 1) continue;
        bool exact = true;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0 && pow_mod(g, d, p) == 1) { exact = false; break; }
        if (exact) return g;
    }
    throw precondition_error("no order-n element found (internal)");
}

std::uint64_t reduce_rational(const Rational& r, std::uint64_t p) {
    Integer num = r.get_num(), den = r.get_den();
    Integer pz(static_cast<unsigned long>(p));
    Integer nm = num % pz, dm = den % pz;
    if (dm < 0) dm += pz;
    if (nm < 0) nm += pz;
    std::uint64_t d = dm.get_ui();
    if (d == 0) throw precondition_error("prime divides a denominator");
    return nm.get_ui() * inv_mod(d, p) % p;
}

std::uint64_t reduce_cyclo(const CycloNum& c, std::uint64_t p, std::uint64_t root) {
    std::uint64_t acc = 0, zp = 1;
    for (const auto& coeff : c.coeffs()) {
        acc = (acc + reduce_rational(coeff, p) * zp) % p;
        zp = zp * (root % p) % p;
    }
    return acc;
}

namespace {

std::uint64_t eval_qmod(const std::vector<std::uint64_t>& q, std::uint64_t x, std::uint64_t p) {
    std::uint64_t v = 0;
    for (size_t i = q.size(); i-- > 0;) v = (v * x + q[i]) % p;
    return v;
}

}  // namespace

CurveCount count_hyperelliptic(const std::vector<std::uint64_t>& q_mod, std::uint64_t p) {
    CurveCount cc;
    long px = static_cast<long>(p);

    // Parallel kernel: exhaustive affine (x, y) loop.
    std::uint64_t affine = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : affine) schedule(static)
#endif
    for (long xi = 0; xi < px; ++xi) {
        std::uint64_t q = eval_qmod(q_mod, static_cast<std::uint64_t>(xi), p);
        std::uint64_t local = 0;
        for (std::uint64_t y = 0; y < p; ++y)
            if (y * y % p == q) ++local;
        affine += local;
    }
    size_t deg = q_mod.size() - 1;
    // Points at infinity of the smooth model: 1 for odd degree, 2 for even
    // degree with square leading coefficient, 0 otherwise.
    std::uint64_t at_inf = 1;
    if (deg % 2 == 0)
        at_inf = pow_mod(q_mod.back(), (p - 1) / 2, p) == 1 ? 2 : 0;
    cc.naive = affine + at_inf;

    // Serial reference: 1 + sum_x (1 + chi(q(x))) with chi via the Euler
    // criterion.
    std::uint64_t total = at_inf;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t q = eval_qmod(q_mod, x, p);
        if (q == 0) total += 1;
        else if (pow_mod(q, (p - 1) / 2, p) == 1) total += 2;
    }
    cc.char_sum = total;
    cc.agree = cc.naive == cc.char_sum;
    return cc;
}

std::uint64_t count_affine_zeros(const MultiPoly& f, std::uint64_t p, std::uint64_t root) {
    const auto& vars = f.ring()->vars();
    size_t k = vars.size();
    if (k > 3) throw precondition_error("affine zero count supports at most 3 variables");
    // reduce each term once
    struct RTerm { Exponents e; std::uint64_t c; };
    std::vector<RTerm> terms;
    for (const auto& [e, c] : f.terms()) terms.push_back({e, reduce_cyclo(c, p, root)});
    std::uint64_t total_assignments = 1;
    for (size_t i = 0; i < k; ++i) total_assignments *= p;
    std::uint64_t zeros = 0;
    long limit = static_cast<long>(total_assignments);
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : zeros) schedule(static)
#endif
    for (long idx = 0; idx < limit; ++idx) {
        std::uint64_t a[3] = {0, 0, 0};
        std::uint64_t t = static_cast<std::uint64_t>(idx);
        for (size_t i = 0; i < k; ++i) { a[i] = t % p; t /= p; }
        std::uint64_t v = 0;
        for (const auto& rt : terms) {
            std::uint64_t tv = rt.c;
            for (size_t i = 0; i < k; ++i) tv = tv * pow_mod(a[i], rt.e[i], p) % p;
            v = (v + tv) % p;
        }
        if (v == 0) ++zeros;
    }
    return zeros;
}

namespace {

PrimeProbe probe_common(std::uint64_t p, unsigned n) {
    PrimeProbe pr;
    pr.p = p;
    pr.n = n;
    pr.root_of_unity = smallest_root_of_unity(p, n);
    for (std::uint64_t g = pr.root_of_unity + 1; g < p; ++g)
        if (pow_mod(g, n, p) == 1) {
            bool exact = true;
            for (unsigned d = 1; d < n; ++d)
                if (n % d == 0 && pow_mod(g, d, p) == 1) { exact = false; break; }
            if (exact) pr.other_roots.push_back(g);
        }
    return pr;
}

std::vector<std::uint64_t> reduce_univariate(const MultiPoly& q, std::uint64_t p,
                                             std::uint64_t root) {
    auto cs = q.coeffs_in("x");
    std::vector<std::uint64_t> out;
    for (const auto& c : cs) {
        if (!c.is_constant()) throw precondition_error("expected a univariate polynomial");
        out.push_back(reduce_cyclo(c.constant_value(), p, root));
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

PrimeProbe probe_curve(const EllipticCurveData& e, std::uint64_t p, unsigned n) {
    PrimeProbe pr = probe_common(p, n);
    if (reduce_cyclo(e.discriminant(), p, pr.root_of_unity) == 0)
        throw precondition_error("prime divides the curve discriminant");
    auto q = reduce_univariate(e.rhs_poly(), p, pr.root_of_unity);
    CurveCount cc = count_hyperelliptic(q, p);
    pr.counts[e.label] = cc.naive;
    pr.counting_paths_agree = cc.agree;
    return pr;
}

PrimeProbe probe_genus2(const Genus2CurveData& c, std::uint64_t p, unsigned n) {
    PrimeProbe pr = probe_common(p, n);
    auto q = reduce_univariate(c.q, p, pr.root_of_unity);
    CurveCount cc = count_hyperelliptic(q, p);
    pr.counts[c.label] = cc.naive;
    pr.counting_paths_agree = cc.agree;
    return pr;
}

PrimeProbe probe_poly(const MultiPoly& f, std::uint64_t p, unsigned n) {
    PrimeProbe pr = probe_common(p, n);
    pr.counts["affine_zeros"] = count_affine_zeros(f, p, pr.root_of_unity);
    return pr;
}

PrimeProbe probe_tower(const CoverSpec& spec, unsigned m, std::uint64_t p, unsigned samples,
                       std::uint64_t seed) {
    PrimeProbe pr = probe_common(p, spec.n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);

    auto f_mod = [&](std::uint64_t xv, std::uint64_t yv) {
        std::uint64_t v = 0;
        const auto& vars = spec.f.ring()->vars();
        for (const auto& [e, c] : spec.f.terms()) {
            std::uint64_t tv = reduce_cyclo(c, p, pr.root_of_unity);
            for (size_t i = 0; i < vars.size(); ++i) {
                std::uint64_t base = vars[i] == "x" ? xv : yv;
                tv = tv * pow_mod(base, e[i], p) % p;
            }
            v = (v + tv) % p;
        }
        return v;
    };
    auto nth_root = [&](std::uint64_t v) -> std::uint64_t {
        for (std::uint64_t w = 1; w < p; ++w)
            if (pow_mod(w, spec.n, p) == v) return w;
        return 0;
    };

    std::uint64_t done = 0, attempts = 0;
    while (done < samples && attempts < 200ull * samples) {
        ++attempts;
        std::vector<std::uint64_t> fx, wv;
        bool ok = true;
        for (unsigned i = 0; i < m && ok; ++i) {
            std::uint64_t fi = f_mod(dist(rng), dist(rng));
            if (fi == 0 || pow_mod(fi, (p - 1) / spec.n, p) != 1) { ok = false; break; }
            fx.push_back(fi);
            wv.push_back(nth_root(fi));
        }
        if (!ok) continue;
        // twist identity: f(x1,y1) * (w_i / w_1)^n = f(x_i, y_i)
        for (unsigned i = 0; i < m; ++i) {
            std::uint64_t z = wv[i] * inv_mod(wv[0], p) % p;
            std::uint64_t lhs = fx[0] * pow_mod(z, spec.n, p) % p;
            if (lhs != fx[i]) pr.twist_checks_passed = false;
        }
        ++done;
    }
    pr.twist_samples = done;
    if (done < samples) pr.twist_checks_passed = false;
    return pr;
}

}  // namespace albtwist
