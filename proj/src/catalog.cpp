#include "albtwist/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "albtwist/probe.hpp"
#include "albtwist/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace albtwist {

namespace {

MultiPoly mono(const RingPtr& r, std::initializer_list<std::pair<const char*, unsigned>> vars,
               long coeff = 1) {
    MultiPoly p = MultiPoly::constant(r, Rational(coeff));
    for (const auto& [v, e] : vars) p *= MultiPoly::variable(r, v, e);
    return p;
}

MultiPoly tokunaga_affine(long sign20) {
    RingPtr r = make_ring({"x", "y"});
    // x^3 - 3xy^4 + 24xy + 2y^6 + sign20*20*y^3 - 16
    return mono(r, {{"x", 3}}) + mono(r, {{"x", 1}, {"y", 4}}, -3) +
           mono(r, {{"x", 1}, {"y", 1}}, 24) + mono(r, {{"y", 6}}, 2) +
           mono(r, {{"y", 3}}, sign20 * 20) + MultiPoly::constant(r, Rational(-16));
}

MultiPoly tokunaga_projective_corrected() {
    RingPtr r = make_ring({"u0", "u1", "u2"});
    return mono(r, {{"u0", 3}, {"u1", 3}}) + mono(r, {{"u0", 1}, {"u1", 1}, {"u2", 4}}, -3) +
           mono(r, {{"u0", 4}, {"u1", 1}, {"u2", 1}}, 24) + mono(r, {{"u2", 6}}, 2) +
           mono(r, {{"u0", 3}, {"u2", 3}}, 40) + mono(r, {{"u0", 6}}, -16);
}

MultiPoly tokunaga_projective_published() {
    RingPtr r = make_ring({"u0", "u1", "u2"});
    // contains the inhomogeneous factor (u2^3 - 8): kept verbatim
    return mono(r, {{"u0", 3}, {"u1", 3}}) + mono(r, {{"u0", 1}, {"u1", 1}, {"u2", 4}}, -3) +
           mono(r, {{"u0", 1}, {"u1", 1}, {"u2", 1}}, 24) + mono(r, {{"u2", 6}}, 2) +
           mono(r, {{"u0", 3}, {"u2", 3}}, 40) + mono(r, {{"u0", 6}}, -16);
}

MultiPoly quintic_rhs(bool plus_x) {
    RingPtr r = make_ring({"x"});
    return mono(r, {{"x", 5}}) + (plus_x ? mono(r, {{"x", 1}}) : MultiPoly::constant(r, Rational(1)));
}

MultiPoly fermat_cubic() {
    RingPtr r = make_ring({"u0", "u1", "u2"});
    return mono(r, {{"u0", 3}}) + mono(r, {{"u1", 3}}) + mono(r, {{"u2", 3}});
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;
    auto put = [&](CatalogEntry e) { cat.emplace(e.key, std::move(e)); };

    {
        CatalogEntry e;
        e.key = "E_rho";
        e.kind = EntryKind::Elliptic;
        e.elliptic = EllipticCurveData::make_simple("E_rho", Rational(0), Rational(0), Rational(1));
        e.note = "y^2 = x^3 + 1; j = 0; CM by a primitive cube root of unity via (x, y) -> "
                 "(zeta3*x, y)";
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "E_i";
        e.kind = EntryKind::Elliptic;
        e.elliptic = EllipticCurveData::make_simple("E_i", Rational(0), Rational(1), Rational(0));
        e.note = "y^2 = x^3 + x; j = 1728; CM by i via (x, y) -> (-x, zeta4*y)";
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "C1";
        e.kind = EntryKind::Genus2;
        e.genus2 = Genus2CurveData::make("C1", quintic_rhs(false));
        e.note = "y^2 = x^5 + 1; genus 2; order-5 automorphism (x, y) -> (zeta5*x, y); "
                 "endomorphisms contain Z[zeta5] (rank 4)";
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "C2";
        e.kind = EntryKind::Genus2;
        e.genus2 = Genus2CurveData::make("C2", quintic_rhs(true));
        e.note = "y^2 = x^5 + x; genus 2; the involution (x, y) -> (1/x, y/x^3) splits the "
                 "Jacobian into two elliptic factors";
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "E1";
        e.kind = EntryKind::Elliptic;
        e.elliptic = EllipticCurveData::make_simple("E1", Rational(1), Rational(-3), Rational(1));
        e.note = "y^2 = x^3 + x^2 - 3x + 1; j = 8000; CM by sqrt(-2)";
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "E2";
        e.kind = EntryKind::Elliptic;
        e.elliptic = EllipticCurveData::make_simple("E2", Rational(-1), Rational(-3), Rational(1));
        e.elliptic_corrected =
            EllipticCurveData::make_simple("E2_corrected", Rational(-1), Rational(-3),
                                           Rational(-1));
        e.note = "published as y^2 = x^3 - x^2 - 3x + 1; corrected form y^2 = x^3 - x^2 - 3x - 1";
        e.caveats.push_back(
            "The published equation y^2 = x^3 - x^2 - 3x + 1 has j = 64000/37, which is not an "
            "algebraic integer, so that curve has no complex multiplication and cannot be a "
            "factor of a CM Jacobian. The sign-corrected curve y^2 = x^3 - x^2 - 3x - 1 (the "
            "x -> -x twist companion of E1) has j = 8000 and CM by sqrt(-2), matching both "
            "elliptic quotients of C2. Both forms are stored; comparisons use the corrected "
            "form and additionally report the published one.");
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "tokunaga_f_thm13";
        e.kind = EntryKind::Polynomial;
        e.poly = tokunaga_affine(-1);
        e.note = "irreducible affine sextic x^3 - 3xy(y^3-8) + 2(y^6 - 20y^3 - 8)";
        e.caveats.push_back(
            "The two published variants of this sextic disagree in the sign of the 20*y^3 "
            "term (affine: -20, projective: +20). Both are stored (tokunaga_f_thm13, "
            "tokunaga_f_prop) and accepted downstream; which is intended is unresolved.");
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "tokunaga_f_prop";
        e.kind = EntryKind::Polynomial;
        e.poly = tokunaga_affine(1);
        e.note = "affine sextic x^3 - 3xy(y^3-8) + 2(y^6 + 20y^3 - 8), the dehomogenization "
                 "of tokunaga_F";
        e.caveats.push_back(
            "Sign variant of tokunaga_f_thm13; see that entry's caveat.");
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "tokunaga_F";
        e.kind = EntryKind::Polynomial;
        e.poly = tokunaga_projective_published();
        e.poly_corrected = tokunaga_projective_corrected();
        e.note = "projective sextic u0^3 u1^3 - 3 u0 u1 u2 (u2^3 - 8 u0^3) + "
                 "2(u2^6 + 20 u0^3 u2^3 - 8 u0^6)";
        e.caveats.push_back(
            "The published projective form contains the inhomogeneous factor (u2^3 - 8); "
            "homogeneity of degree 6 forces (u2^3 - 8 u0^3). The published form is stored "
            "verbatim and the degree-forced correction alongside; operations needing a "
            "homogeneous input use the corrected form.");
        put(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "fermat";
        e.kind = EntryKind::Polynomial;
        e.poly = fermat_cubic();
        e.note = "smooth plane cubic u0^3 + u1^3 + u2^3 (test fixture)";
        put(std::move(e));
    }
    return cat;
}

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& key) {
    const auto& cat = catalog();
    auto it = cat.find(key);
    if (it == cat.end()) {
        std::string msg = "unknown catalog key '" + key + "'; available:";
        for (const auto& [k, v] : cat) msg += " " + k;
        throw precondition_error(msg);
    }
    return it->second;
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, v] : catalog()) keys.push_back(k);
    return keys;
}

// ---------------------------------------------------------------------------
// dual cubic
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kUVars{"u0", "u1", "u2"};

std::array<MultiPoly, 3> cubic_partials(const MultiPoly& F) {
    return {F.derivative("u0"), F.derivative("u1"), F.derivative("u2")};
}

void validate_cubic(const MultiPoly& F) {
    for (const auto& v : F.ring()->vars())
        if (std::find(kUVars.begin(), kUVars.end(), v) == kUVars.end() && F.involves(v))
            throw precondition_error("cubic must be in (u0, u1, u2); found " + v);
    auto rep = is_homogeneous(F);
    if (!rep.homogeneous || rep.degree != 3)
        throw precondition_error("input must be homogeneous of degree 3");
}

// gcd of the nonzero members, univariate in `var`; zero if all are zero.
MultiPoly gcd_chain(const std::vector<MultiPoly>& polys, const std::string& var) {
    MultiPoly g(polys.empty() ? make_ring({var}) : polys[0].ring());
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (g.is_zero()) g = p;
        else g = univariate_gcd(g, p, var);
        if (g.is_constant()) break;
    }
    return g;
}

std::vector<Rational> rational_roots_of(const MultiPoly& g, const std::string& var) {
    // delegate to the verifier's helper shape: simple local version
    auto cs = g.coeffs_in(var);
    std::vector<Rational> c;
    for (const auto& p : cs) {
        if (!p.is_constant() || !p.constant_value().is_rational()) return {};
        c.push_back(p.constant_value().rational_value());
    }
    std::vector<Rational> roots;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() <= 1) return roots;
    if (c.front() == 0) roots.push_back(Rational(0));
    Integer den(1);
    for (const auto& r : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Integer> a;
    for (const auto& r : c) a.push_back(Integer(r * den));
    size_t lo = 0;
    while (lo < a.size() && a[lo] == 0) ++lo;
    auto divisors = [](Integer n) {
        std::vector<Integer> out;
        n = abs(n);
        for (Integer i = 1; i * i <= n; ++i)
            if (n % i == 0) { out.push_back(i); out.push_back(n / i); }
        return out;
    };
    auto eval = [&](const Rational& x) {
        Rational v(0);
        for (size_t i = a.size(); i-- > 0;) v = v * x + Rational(a[i]);
        return v;
    };
    for (const Integer& pn : divisors(a[lo]))
        for (const Integer& q : divisors(a.back()))
            for (int s : {1, -1}) {
                Rational cand(s < 0 ? Integer(-pn) : pn, q);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval(cand) == 0) roots.push_back(cand);
            }
    return roots;
}

enum class ChartVerdict { Smooth, Singular, Unknown };

// Common-zero analysis of the three sheared partials.
ChartVerdict analyze_sheared(const std::array<MultiPoly, 3>& P) {
    RingPtr ur = P[0].ring();
    MultiPoly zero_c = MultiPoly::constant(ur, Rational(0));

    // Point (0:0:1)
    bool all_zero_001 = true;
    for (const auto& p : P) {
        std::map<std::string, CycloNum> at{{"u0", CycloNum()}, {"u1", CycloNum()},
                                           {"u2", CycloNum(Rational(1))}};
        if (!p.subst(at).is_zero()) all_zero_001 = false;
    }
    if (all_zero_001) return ChartVerdict::Singular;

    // Rest of the line u0 = 0: binary forms in (u1, u2), dehomogenized at u1 = 1.
    {
        std::vector<MultiPoly> h;
        for (const auto& p : P)
            h.push_back(p.subst({{"u0", zero_c}, {"u1", MultiPoly::constant(ur, Rational(1))}}));
        bool all_zero = std::all_of(h.begin(), h.end(), [](const MultiPoly& q) { return q.is_zero(); });
        if (all_zero) return ChartVerdict::Singular;
        MultiPoly g = gcd_chain(h, "u2");
        if (!g.is_zero() && g.degree_in("u2") > 0) return ChartVerdict::Singular;
    }

    // Affine chart u0 = 1.
    std::array<MultiPoly, 3> A;
    for (size_t i = 0; i < 3; ++i)
        A[i] = P[i].subst({{"u0", MultiPoly::constant(ur, Rational(1))}});
    for (const auto& a : A)
        if (a.is_constant() && !a.is_zero()) return ChartVerdict::Smooth;

    std::vector<MultiPoly> elim;
    bool any_u2 = false;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            long di = A[i].degree_in("u2"), dj = A[j].degree_in("u2");
            if (di > 0 && dj > 0) {
                elim.push_back(resultant(A[i], A[j], "u2"));
                any_u2 = true;
            } else if (di <= 0 && dj <= 0) {
                continue;
            } else {
                elim.push_back(di <= 0 ? A[i] : A[j]);
            }
        }
    if (!any_u2 && elim.empty()) {
        // all partials free of u2 in this chart: common zeros unconstrained in u2
        std::vector<MultiPoly> av(A.begin(), A.end());
        MultiPoly g = gcd_chain(av, "u1");
        return g.degree_in("u1") > 0 ? ChartVerdict::Singular : ChartVerdict::Smooth;
    }
    MultiPoly g = gcd_chain(elim, "u1");
    if (g.is_zero()) return ChartVerdict::Unknown;  // resultants degenerated
    if (g.degree_in("u1") <= 0) return ChartVerdict::Smooth;

    // Possible singular locus: confirm over Q where possible.
    for (const Rational& c : rational_roots_of(g, "u1")) {
        std::vector<MultiPoly> specialized;
        bool contradicted = false;
        for (const auto& a : A) {
            MultiPoly s = a.subst({{"u1", MultiPoly::constant(ur, CycloNum(c))}});
            if (s.is_constant() && !s.is_zero()) { contradicted = true; break; }
            specialized.push_back(s);
        }
        if (contradicted) continue;
        MultiPoly gs = gcd_chain(specialized, "u2");
        if (gs.is_zero() || gs.degree_in("u2") > 0) return ChartVerdict::Singular;
    }
    return ChartVerdict::Unknown;
}

MultiPoly apply_shear(const MultiPoly& F, const std::array<std::array<long, 3>, 3>& S) {
    RingPtr ur = make_ring(kUVars);
    std::map<std::string, MultiPoly> sub;
    for (size_t i = 0; i < 3; ++i) {
        MultiPoly row(ur);
        for (size_t j = 0; j < 3; ++j)
            row += MultiPoly::variable(ur, kUVars[j]) * MultiPoly::constant(ur, Rational(S[i][j]));
        sub.emplace(kUVars[i], row);
    }
    return F.in_ring(ur).subst(sub);
}

long det3(const std::array<std::array<long, 3>, 3>& S) {
    return S[0][0] * (S[1][1] * S[2][2] - S[1][2] * S[2][1]) -
           S[0][1] * (S[1][0] * S[2][2] - S[1][2] * S[2][0]) +
           S[0][2] * (S[1][0] * S[2][1] - S[1][1] * S[2][0]);
}

}  // namespace

bool cubic_is_smooth(const MultiPoly& F3) {
    validate_cubic(F3);
    MultiPoly F = F3.in_ring(make_ring(kUVars));
    for (const auto& p : cubic_partials(F))
        if (p.is_zero()) return false;

    std::mt19937_64 rng(0x5ca1ab1eull);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::array<std::array<long, 3>, 3> S{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        if (attempt > 0) {
            do {
                for (auto& row : S)
                    for (auto& v : row) v = coeff(rng);
            } while (det3(S) == 0);
        }
        MultiPoly FS = apply_shear(F, S);
        ChartVerdict v = analyze_sheared(cubic_partials(FS));
        if (v == ChartVerdict::Smooth) return true;
        if (v == ChartVerdict::Singular) return false;
    }
    // Every shear was inconclusive: refuse to certify smoothness.
    return false;
}

MultiPoly dual_cubic(const MultiPoly& F3) {
    validate_cubic(F3);
    if (!cubic_is_smooth(F3))
        throw precondition_error("singular cubic: dual degree < 6; Pluecker count fails");

    RingPtr dr = make_ring({"v0", "v1", "v2", "s", "t"});
    auto V = [&](const char* n, unsigned e = 1) { return MultiPoly::variable(dr, n, e); };
    MultiPoly sub_u0 = V("v2") * V("s");
    MultiPoly sub_u1 = V("v2") * V("t");
    MultiPoly sub_u2 = -(V("v0") * V("s") + V("v1") * V("t"));
    MultiPoly G = F3.in_ring(make_ring(kUVars))
                      .subst({{"u0", sub_u0}, {"u1", sub_u1}, {"u2", sub_u2}});

    // binary cubic coefficients k[j] of s^j t^(3-j)
    std::array<MultiPoly, 4> k{MultiPoly(dr), MultiPoly(dr), MultiPoly(dr), MultiPoly(dr)};
    auto cs = G.coeffs_in("s");
    cs.resize(4, MultiPoly(dr));
    for (unsigned j = 0; j <= 3; ++j) {
        auto ct = cs[j].coeffs_in("t");
        ct.resize(4, MultiPoly(dr));
        k[j] = ct[3 - j];
    }
    const MultiPoly &k0 = k[0], &k1 = k[1], &k2 = k[2], &k3 = k[3];
    auto C = [&](long v) { return MultiPoly::constant(dr, Rational(v)); };
    MultiPoly disc = C(18) * k3 * k2 * k1 * k0 - C(4) * k2.pow(3) * k0 + k2.pow(2) * k1.pow(2) -
                     C(4) * k3 * k1.pow(3) - C(27) * k3.pow(2) * k0.pow(2);

    MultiPoly v2 = V("v2");
    while (true) {
        auto q = exact_divide(disc, v2);
        if (!q) break;
        disc = std::move(*q);
    }
    if (disc.involves("s") || disc.involves("t"))
        throw precondition_error("internal: dual elimination left parameters behind");
    MultiPoly dual = disc.in_ring(make_ring({"v0", "v1", "v2"}));
    if (dual.total_degree() != 6)
        throw precondition_error("dual degree < 6; Pluecker count fails");

    // canonical scaling: integer-primitive with positive leading coefficient,
    // when all coefficients are rational
    bool all_rational = true;
    for (const auto& [e, c] : dual.terms())
        if (!c.is_rational()) { all_rational = false; break; }
    if (all_rational) {
        Integer num_gcd(0), den_lcm(1);
        for (const auto& [e, c] : dual.terms()) {
            Rational r = c.rational_value();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
        }
        if (num_gcd != 0) {
            Rational scale(den_lcm, num_gcd);
            scale.canonicalize();
            dual = dual * CycloNum(scale);
            if (sgn(dual.leading_term().second.rational_value()) < 0)
                dual = -dual;
        }
    }
    return dual;
}

// ---------------------------------------------------------------------------
// two-power decomposition search
// ---------------------------------------------------------------------------

namespace {

void enumerate_monomials(size_t nvars, unsigned degree, Exponents& cur, size_t pos,
                         std::vector<Exponents>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (unsigned d = 0; d <= degree; ++d) {
        cur[pos] = d;
        enumerate_monomials(nvars, degree - d, cur, pos + 1, out);
    }
}

}  // namespace

DecompositionSearchResult find_two_power_decomposition(const MultiPoly& F, unsigned a,
                                                       unsigned b, const SearchBounds& bounds) {
    if (a < 2 || b < 2) throw precondition_error("exponents must be >= 2");
    auto rep = is_homogeneous(F);
    if (!rep.homogeneous) throw precondition_error("F must be homogeneous");
    long degF = rep.degree;
    if (degF <= 0 || degF % a != 0 || degF % b != 0)
        throw precondition_error("degree incompatibility: both exponents must divide deg F");
    for (const auto& [e, c] : F.terms())
        if (!c.is_rational())
            throw precondition_error("decomposition search requires rational coefficients");
    unsigned degH = static_cast<unsigned>(degF) / b;

    RingPtr ring = F.ring();
    std::vector<Exponents> monos;
    Exponents cur(ring->arity(), 0);
    enumerate_monomials(ring->arity(), degH, cur, 0, monos);
    size_t M = monos.size();
    long range = bounds.coeff_max - bounds.coeff_min + 1;
    if (range < 1) throw precondition_error("empty coefficient range");
    double total_d = 1;
    for (size_t i = 0; i < M; ++i) total_d *= static_cast<double>(range);
    if (total_d > 2e9) throw precondition_error("search lattice too large for these bounds");
    std::uint64_t total = static_cast<std::uint64_t>(total_d + 0.5);

    // Modular evaluation filter.
    const std::uint64_t p = bounds.filter_prime;
    const unsigned T = 20;
    std::mt19937_64 rng(0xdecaf0ull);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::vector<std::uint64_t>> pts(T, std::vector<std::uint64_t>(ring->arity()));
    for (auto& pt : pts)
        for (auto& v : pt) v = dist(rng);
    std::vector<std::uint64_t> Fv(T);
    std::vector<std::vector<std::uint64_t>> monv(T, std::vector<std::uint64_t>(M));
    for (unsigned t = 0; t < T; ++t) {
        std::uint64_t acc = 0;
        for (const auto& [e, c] : F.terms()) {
            std::uint64_t tv = reduce_rational(c.rational_value(), p);
            for (size_t i = 0; i < e.size(); ++i) tv = tv * pow_mod(pts[t][i], e[i], p) % p;
            acc = (acc + tv) % p;
        }
        Fv[t] = acc;
        for (size_t j = 0; j < M; ++j) {
            std::uint64_t mv = 1;
            for (size_t i = 0; i < monos[j].size(); ++i)
                mv = mv * pow_mod(pts[t][i], monos[j][i], p) % p;
            monv[t][j] = mv;
        }
    }
    const std::uint64_t res_exp = (p - 1) / std::gcd<std::uint64_t>(a, p - 1);

    auto passes_filter = [&](const std::vector<long>& coeffs) {
        std::uint64_t first_nonzero = 0;
        bool have_first = false;
        for (unsigned t = 0; t < T; ++t) {
            std::uint64_t hv = 0;
            for (size_t j = 0; j < M; ++j) {
                std::uint64_t cm = coeffs[j] >= 0
                                       ? static_cast<std::uint64_t>(coeffs[j]) % p
                                       : p - static_cast<std::uint64_t>(-coeffs[j]) % p;
                hv = (hv + cm % p * monv[t][j]) % p;
            }
            std::uint64_t r = (Fv[t] + p - pow_mod(hv, b, p)) % p;
            if (r == 0) continue;
            if (!have_first) {
                first_nonzero = r;
                have_first = true;
                continue;
            }
            // r / first_nonzero must be an a-th power residue
            if (pow_mod(r * inv_mod(first_nonzero, p) % p, res_exp, p) != 1) return false;
        }
        return true;
    };

    auto decode = [&](std::uint64_t idx) {
        std::vector<long> c(M);
        for (size_t j = 0; j < M; ++j) {
            c[j] = bounds.coeff_min + static_cast<long>(idx % static_cast<std::uint64_t>(range));
            idx /= static_cast<std::uint64_t>(range);
        }
        return c;
    };

    auto exact_check = [&](const std::vector<long>& coeffs) -> std::optional<Decomposition> {
        MultiPoly H(ring);
        for (size_t j = 0; j < M; ++j)
            if (coeffs[j] != 0) H.add_term(monos[j], CycloNum(Rational(coeffs[j])));
        MultiPoly R = F - H.pow(b);
        if (R.is_zero()) return Decomposition{MultiPoly(ring), H};
        auto G = perfect_power_root(R, a, bounds.ambient_order);
        if (!G) return std::nullopt;
        return Decomposition{*G, H};
    };

    DecompositionSearchResult result;
    result.candidates_tested = total;
    std::vector<Decomposition> found;

    if (bounds.parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<Decomposition> local;
#pragma omp for schedule(dynamic, 4096)
            for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
                auto coeffs = decode(static_cast<std::uint64_t>(idx));
                if (!passes_filter(coeffs)) continue;
                if (auto d = exact_check(coeffs)) local.push_back(std::move(*d));
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
#else
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            auto coeffs = decode(idx);
            if (!passes_filter(coeffs)) continue;
            if (auto d = exact_check(coeffs)) found.push_back(std::move(*d));
        }
#endif
    } else {
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            auto coeffs = decode(idx);
            if (!passes_filter(coeffs)) continue;
            if (auto d = exact_check(coeffs)) found.push_back(std::move(*d));
        }
    }

    std::sort(found.begin(), found.end(), [](const Decomposition& x, const Decomposition& y) {
        auto kx = x.H.to_string() + "|" + x.G.to_string();
        auto ky = y.H.to_string() + "|" + y.G.to_string();
        return kx < ky;
    });
    result.found = std::move(found);
    result.exhausted_bounds = true;
    return result;
}

// ---------------------------------------------------------------------------
// load-time style self check (invoked by tests and the CLI)
// ---------------------------------------------------------------------------

bool catalog_selfcheck(std::string* failure) {
    auto fail = [&](const std::string& msg) {
        if (failure) *failure = msg;
        return false;
    };
    try {
        const auto& erho = *catalog_get("E_rho").elliptic;
        if (!verify_cm_automorphism(erho, RationalMap::linear(CycloNum::zeta(3),
                                                              CycloNum(Rational(1))), 3)
                 .passes)
            return fail("E_rho cube-root automorphism check failed");
        const auto& ei = *catalog_get("E_i").elliptic;
        if (!verify_cm_automorphism(ei, RationalMap::linear(CycloNum(Rational(-1)),
                                                            CycloNum::zeta(4)), 4)
                 .passes)
            return fail("E_i fourth-root automorphism check failed");
        const auto& c1 = *catalog_get("C1").genus2;
        if (!verify_cm_automorphism(c1, RationalMap::linear(CycloNum::zeta(5),
                                                            CycloNum(Rational(1))), 5)
                 .passes)
            return fail("C1 fifth-root automorphism check failed");
        // discriminants / squarefreeness are enforced by the constructors
        for (const auto& k : catalog_keys()) catalog_get(k);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return true;
}

}  // namespace albtwist
