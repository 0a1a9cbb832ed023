#include "albtwist/verify.hpp"

#include <algorithm>
#include <numeric>

namespace albtwist {

namespace {

MultiPoly subst_xy(const MultiPoly& f, const MultiPoly& xv, const MultiPoly& yv) {
    return f.subst({{"x", xv}, {"y", yv}});
}

RelationSet curve_relation(const MultiPoly& q) {
    RelationSet rels;
    rels.add("y", 2, q);
    return rels;
}

bool zero_mod(const MultiPoly& p, const RelationSet& rels) {
    return normal_form(p, rels).is_zero();
}

bool is_identity_on_curve(const RationalMap& m, const RelationSet& rels) {
    RingPtr r = m.x_num.ring();
    MultiPoly x = MultiPoly::variable(r, "x").in_ring(r);
    MultiPoly y = MultiPoly::variable(r, "y").in_ring(r);
    if (normal_form(m.x_den, rels).is_zero() || normal_form(m.y_den, rels).is_zero())
        return false;
    return zero_mod(m.x_num - x * m.x_den, rels) && zero_mod(m.y_num - y * m.y_den, rels);
}

// All rational roots of c0 + c1 x + ... + cd x^d, exact.
std::vector<Rational> rational_roots(std::vector<Rational> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::vector<Rational> roots;
    if (c.size() <= 1) return roots;
    // roots at zero
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return roots;
    Integer den(1);
    for (const auto& r : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Integer> a;
    for (const auto& r : c) a.push_back(Integer(r * den));
    auto divisors = [](Integer n) {
        std::vector<Integer> out;
        n = abs(n);
        for (Integer i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                out.push_back(i);
                out.push_back(n / i);
            }
        return out;
    };
    auto eval = [&](const Rational& x) {
        Rational v(0);
        for (size_t i = a.size(); i-- > 0;) v = v * x + Rational(a[i]);
        return v;
    };
    for (const Integer& p : divisors(a.front()))
        for (const Integer& q : divisors(a.back()))
            for (int s : {1, -1}) {
                Rational cand(s < 0 ? Integer(-p) : p, q);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> eval_rational(const MultiPoly& P, const RationalMap& m) {
    long A = std::max(P.degree_in("x"), 0l);
    long B = std::max(P.degree_in("y"), 0l);
    RingPtr r = merged_ring(P.ring(), m.x_num.ring());
    auto idx = [&](const std::string& v) { return *P.ring()->index_of(v); };
    bool has_x = P.ring()->index_of("x").has_value();
    bool has_y = P.ring()->index_of("y").has_value();
    MultiPoly num(r);
    for (const auto& [e, c] : P.terms()) {
        long ax = has_x ? static_cast<long>(e[idx("x")]) : 0;
        long by = has_y ? static_cast<long>(e[idx("y")]) : 0;
        MultiPoly t = MultiPoly::constant(r, c);
        t *= m.x_num.pow(static_cast<unsigned>(ax)).in_ring(r);
        t *= m.x_den.pow(static_cast<unsigned>(A - ax)).in_ring(r);
        t *= m.y_num.pow(static_cast<unsigned>(by)).in_ring(r);
        t *= m.y_den.pow(static_cast<unsigned>(B - by)).in_ring(r);
        // any other variables of P's ring pass through unchanged
        Exponents rest(r->arity(), 0);
        const auto& vars = P.ring()->vars();
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] != "x" && vars[i] != "y" && e[i] != 0) rest[*r->index_of(vars[i])] = e[i];
        MultiPoly restp(r);
        restp.add_term(rest, CycloNum(Rational(1)));
        num += t * restp;
    }
    MultiPoly den = m.x_den.pow(static_cast<unsigned>(A)) * m.y_den.pow(static_cast<unsigned>(B));
    return {num, den.in_ring(r)};
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner, const MultiPoly& q) {
    RelationSet rels = curve_relation(q);
    auto [nxn, nxd] = eval_rational(outer.x_num, inner);
    auto [dxn, dxd] = eval_rational(outer.x_den, inner);
    auto [nyn, nyd] = eval_rational(outer.y_num, inner);
    auto [dyn_, dyd] = eval_rational(outer.y_den, inner);
    RationalMap m{normal_form(nxn * dxd, rels), normal_form(nxd * dxn, rels),
                  normal_form(nyn * dyd, rels), normal_form(nyd * dyn_, rels)};
    return m;
}

MembershipPointReport verify_point(const TowerPresentation& tower, const TwistPoint& pt,
                                   size_t index) {
    RingPtr ring = tower.ring;
    auto f_at = [&](const MultiPoly& xv, const MultiPoly& yv) {
        return subst_xy(tower.f, xv, yv).in_ring(ring);
    };
    MultiPoly f1 = f_at(MultiPoly::variable(ring, "x1"), MultiPoly::variable(ring, "y1"));
    MultiPoly cleared =
        f1 * pt.z_num.pow(tower.n) - f_at(pt.x, pt.y) * pt.z_den.pow(tower.n);
    NormalFormResult nf = normal_form_traced(cleared, tower.product_relations);
    return {index, nf.value.is_zero(), nf.rewrite_steps};
}

MembershipReport verify_membership(const TowerPresentation& tower) {
    MembershipReport rep;
    rep.all_pass = true;
    for (size_t i = 0; i < tower.points.size(); ++i) {
        rep.points.push_back(verify_point(tower, tower.points[i], i + 1));
        rep.all_pass = rep.all_pass && rep.points.back().passes;
    }
    return rep;
}

DescentReport verify_descent(const TowerPresentation& tower) {
    DescentReport rep;
    rep.all_pass = true;
    RingPtr ring = tower.ring;
    MultiPoly w1pow = MultiPoly::variable(ring, "w1", tower.n - 1);
    for (size_t i = 0; i < tower.quotient_relations.size(); ++i) {
        std::string zi = "z" + std::to_string(i + 1);
        MultiPoly expr = tower.quotient_relations[i].subst(
            {{zi, w1pow * MultiPoly::variable(ring, "w" + std::to_string(i + 2))}});
        bool ok = normal_form(expr, tower.product_relations).is_zero();
        rep.relation_ok.push_back(ok);
        rep.all_pass = rep.all_pass && ok;
    }
    return rep;
}

CmReport verify_cm_automorphism(const MultiPoly& q, const RationalMap& map,
                                unsigned claimed_order) {
    if (claimed_order < 1) throw precondition_error("claimed order must be >= 1");
    RelationSet rels = curve_relation(q);
    CmReport rep;

    RingPtr xy = make_ring({"x", "y"});
    MultiPoly curve = MultiPoly::variable(xy, "y", 2) - q.in_ring(xy);
    auto [num, den] = eval_rational(curve, map);
    rep.on_curve = !normal_form(den, rels).is_zero() && zero_mod(num, rels);

    RationalMap cur = map;
    for (unsigned k = 1; k <= claimed_order; ++k) {
        if (is_identity_on_curve(cur, rels)) {
            rep.observed_order = k;
            break;
        }
        if (k < claimed_order) cur = compose(map, cur, q);
    }
    rep.order_matches = rep.observed_order == claimed_order;
    rep.passes = rep.on_curve && rep.order_matches;
    return rep;
}

CmReport verify_cm_automorphism(const EllipticCurveData& e, const RationalMap& map,
                                unsigned claimed_order) {
    return verify_cm_automorphism(e.rhs_poly(), map, claimed_order);
}

CmReport verify_cm_automorphism(const Genus2CurveData& c, const RationalMap& map,
                                unsigned claimed_order) {
    return verify_cm_automorphism(c.q, map, claimed_order);
}

IsogenyReport verify_isogeny_cm(const EllipticCurveData& e, unsigned ell) {
    if (ell != 2 && ell != 3) throw precondition_error("only degrees 2 and 3 are supported");
    for (const CycloNum* c : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
        if (!c->is_rational())
            throw precondition_error("isogeny search requires rational coefficients");
    if (!e.a1.is_zero() || !e.a3.is_zero())
        throw precondition_error("isogeny search requires a1 = a3 = 0");

    Rational a2 = e.a2.rational_value(), a4 = e.a4.rational_value(), a6 = e.a6.rational_value();
    // depress: x -> x - a2/3 gives y^2 = x^3 + A x + B
    Rational A = a4 - a2 * a2 / 3;
    Rational B = a6 - a2 * a4 / 3 + 2 * a2 * a2 * a2 / 27;

    IsogenyReport rep;
    rep.ell = ell;
    rep.j_input = e.j_invariant().rational_value();

    std::vector<Rational> kernel_xs;
    if (ell == 2) {
        kernel_xs = rational_roots({B, A, Rational(0), Rational(1)});
    } else {
        // 3-division polynomial 3x^4 + 6Ax^2 + 12Bx - A^2
        kernel_xs = rational_roots({-A * A, 12 * B, 6 * A, Rational(0), Rational(3)});
    }
    for (const Rational& x0 : kernel_xs) {
        Rational gx = 3 * x0 * x0 + A;
        Rational v, w;
        if (ell == 2) {
            v = gx;
            w = x0 * v;
        } else {
            v = 2 * gx;
            w = 4 * (x0 * x0 * x0 + A * x0 + B) + x0 * v;
        }
        IsogenyQuotient iq;
        iq.kernel_x = x0;
        iq.quotient_a4 = A - 5 * v;
        iq.quotient_a6 = B - 7 * w;
        Rational A3 = 4 * iq.quotient_a4 * iq.quotient_a4 * iq.quotient_a4;
        Rational denom = A3 + 27 * iq.quotient_a6 * iq.quotient_a6;
        if (denom == 0) continue;  // singular quotient: not a valid kernel here
        iq.quotient_j = 1728 * A3 / denom;
        iq.j_match = iq.quotient_j == rep.j_input;
        rep.any_match = rep.any_match || iq.j_match;
        rep.quotients.push_back(iq);
    }
    rep.verdict = rep.any_match ? "self-isogeny evidence" : "no evidence at this degree";
    return rep;
}

SplitReport verify_genus2_split(const Genus2CurveData& c, const RationalMap& involution,
                                const CycloNum& j1_expected, const CycloNum& j2_expected) {
    RingPtr xy = make_ring({"x", "y"});
    MultiPoly x = MultiPoly::variable(xy, "x"), y = MultiPoly::variable(xy, "y");
    MultiPoly one = MultiPoly::constant(xy, Rational(1));

    CmReport cm = verify_cm_automorphism(c.q, involution, 2);
    if (!cm.on_curve)
        throw precondition_error("supplied map is not an involution of the curve " + c.label);
    if (involution.x_num == x && involution.x_den == one)
        throw precondition_error(
            "hyperelliptic involution rejected: the quotient is rational, not elliptic");
    if (!(involution.x_num == one && involution.x_den == x && involution.y_num == y &&
          involution.y_den == x.pow(3)))
        throw precondition_error("unsupported involution shape; expected (1/x, y/x^3)");
    if (c.q.degree_in("x") != 5)
        throw precondition_error("splitting requires a degree-5 right-hand side");

    SplitReport rep;
    std::vector<EllipticCurveData> quotients;
    for (int s : {1, -1}) {
        // (y (x+s)/x^2)^2 = q(x) (x+s)^2 / x^4, a symmetric Laurent polynomial
        // of degree 3 in u = x + 1/x.
        RingPtr xr = c.q.ring();
        MultiPoly shift = MultiPoly::variable(xr, "x") + MultiPoly::constant(xr, Rational(s));
        MultiPoly M = c.q * shift * shift;
        auto mc = M.coeffs_in("x");
        mc.resize(8, MultiPoly(xr));
        auto cv = [&](size_t j) {
            if (!mc[j].is_constant())
                throw precondition_error("internal: non-constant Laurent coefficient");
            return mc[j].constant_value();
        };
        if (!cv(0).is_zero())
            throw precondition_error("quotient construction failed: x does not divide q*(x+s)^2");
        for (unsigned k = 1; k <= 3; ++k)
            if (cv(4 + k) != cv(4 - k))
                throw precondition_error("quotient construction failed: Laurent symmetry broken");
        // c0 + c1 P1 + c2 P2 + c3 P3 with P1 = u, P2 = u^2-2, P3 = u^3-3u
        CycloNum c0 = cv(4), c1 = cv(5), c2 = cv(6), c3 = cv(7);
        CycloNum r3 = c3, r2 = c2, r1 = c1 - CycloNum(Rational(3)) * c3,
                 r0 = c0 - CycloNum(Rational(2)) * c2;
        if (r3.is_zero())
            throw precondition_error("quotient construction failed: cubic degenerates");
        // v^2 = r3 u^3 + r2 u^2 + r1 u + r0  ~  Y^2 = X^3 + r2 X^2 + r1 r3 X + r0 r3^2
        quotients.push_back(EllipticCurveData::make(
            c.label + (s > 0 ? "_plus" : "_minus"), CycloNum(), r2, CycloNum(), r1 * r3,
            r0 * r3 * r3));
    }
    rep.quotient_plus = quotients[0];
    rep.quotient_minus = quotients[1];
    rep.j_plus = quotients[0].j_invariant();
    rep.j_minus = quotients[1].j_invariant();
    rep.matches = (rep.j_plus == j1_expected && rep.j_minus == j2_expected) ||
                  (rep.j_plus == j2_expected && rep.j_minus == j1_expected);
    return rep;
}

unsigned coefficient_span_rank(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) return 0;
    RingPtr ring = polys[0].ring();
    for (const auto& p : polys) ring = merged_ring(ring, p.ring());
    std::map<Exponents, size_t, GradedLexLess> cols;
    std::vector<MultiPoly> aligned;
    for (const auto& p : polys) {
        aligned.push_back(p.in_ring(ring));
        for (const auto& [e, c] : aligned.back().terms()) cols.emplace(e, 0);
    }
    size_t k = 0;
    for (auto& [e, i] : cols) i = k++;
    std::vector<std::vector<CycloNum>> m;
    for (const auto& p : aligned) {
        std::vector<CycloNum> row(cols.size());
        for (const auto& [e, c] : p.terms()) row[cols.at(e)] = c;
        m.push_back(std::move(row));
    }
    unsigned rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < m.size() && col < cols.size(); ++col) {
        size_t piv = r;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        CycloNum inv = m[r][col].inverse();
        for (size_t j = col; j < cols.size(); ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            CycloNum f = m[i][col];
            for (size_t j = col; j < cols.size(); ++j) m[i][j] -= f * m[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

KulikovReport verify_kulikov(const MultiPoly& F, const MultiPoly& G1, const MultiPoly& H1,
                             const MultiPoly& G2, const MultiPoly& H2, unsigned a, unsigned b) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw precondition_error("exponents must satisfy a, b >= 2 and gcd(a, b) = 1");
    auto repF = is_homogeneous(F);
    if (!repF.homogeneous) throw precondition_error("F must be homogeneous");
    const std::pair<const MultiPoly*, unsigned> parts[] = {{&G1, a}, {&H1, b}, {&G2, a}, {&H2, b}};
    for (const auto& [p, e] : parts) {
        auto rep = is_homogeneous(*p);
        if (!rep.homogeneous || rep.degree * e != repF.degree)
            throw precondition_error("degree mismatch: each part must be homogeneous with "
                                     "exponent times degree equal to deg F");
    }
    KulikovReport rep;
    MultiPoly g1 = G1.pow(a), h1 = H1.pow(b), g2 = G2.pow(a), h2 = H2.pow(b);
    rep.identity1 = (g1 + h1) == F;
    rep.identity2 = (g2 + h2) == F;
    rep.span_rank = coefficient_span_rank({g1, h1, g2, h2});
    rep.verdict = rep.identity1 && rep.identity2 && rep.span_rank >= 3;
    rep.surface_image = rep.verdict;
    return rep;
}

}  // namespace albtwist
