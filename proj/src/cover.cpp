#include "albtwist/cover.hpp"

#include <numeric>

namespace albtwist {

CoverSpec make_cover(const MultiPoly& f, unsigned n) {
    if (n < 2) throw precondition_error("cover degree n must be >= 2");
    for (const auto& v : f.ring()->vars())
        if (v != "x" && v != "y" && f.involves(v))
            throw precondition_error("cover polynomial must be in (x, y); found " + v);
    long rd = f.total_degree();
    if (rd < 2) throw precondition_error("cover polynomial must have degree >= 2");

    CoverSpec spec{n, f.in_ring(make_ring({"x", "y"})), static_cast<unsigned>(rd), 0, 0,
                   MultiPoly(f.ring()), MultiPoly(f.ring()), MultiPoly(f.ring())};
    spec.e = (spec.r + n - 1) / n;  // smallest e with n*e >= r
    spec.n0 = n * spec.e - spec.r;
    spec.branch_locus = spec.n0 == 0 ? BranchLocus::CurveOnly : BranchLocus::CurveAndLineAtInfinity;

    // F(u0,u1,u2) with F(1,x,y) = f: homogenize with u0, then rename x,y.
    MultiPoly F0 = homogenize(spec.f, "u0");
    RingPtr uring = make_ring({"u0", "u1", "u2"});
    spec.F = F0.subst({{"x", MultiPoly::variable(uring, "u1")},
                       {"y", MultiPoly::variable(uring, "u2")}})
                 .in_ring(uring);

    RingPtr aring = make_ring({"x", "y", "w"});
    spec.affine_eq = MultiPoly::variable(aring, "w", n) - spec.f.in_ring(aring);

    RingPtr wring = make_ring({"u0", "u1", "u2", "u3"});
    spec.weighted_eq = MultiPoly::variable(wring, "u3", n) -
                       MultiPoly::variable(wring, "u0", spec.n0) * spec.F.in_ring(wring);
    return spec;
}

TowerPresentation build_tower(const CoverSpec& spec, unsigned m) {
    if (m < 1) throw precondition_error("tower length m must be >= 1");
    std::vector<std::string> vars{"x", "y", "z"};
    for (unsigned i = 1; i <= m; ++i) {
        vars.push_back("x" + std::to_string(i));
        vars.push_back("y" + std::to_string(i));
        vars.push_back("w" + std::to_string(i));
    }
    for (unsigned i = 1; m >= 2 && i <= m - 1; ++i) vars.push_back("z" + std::to_string(i));
    RingPtr ring = make_ring(vars);

    auto f_at = [&](const std::string& xv, const std::string& yv) {
        return spec.f
            .subst({{"x", MultiPoly::variable(ring, xv)}, {"y", MultiPoly::variable(ring, yv)}})
            .in_ring(ring);
    };

    TowerPresentation t{spec.n, m, spec.f, ring, {}, {}, MultiPoly(ring), {}};
    for (unsigned i = 1; i <= m; ++i)
        t.product_relations.add("w" + std::to_string(i), spec.n,
                                f_at("x" + std::to_string(i), "y" + std::to_string(i)));

    MultiPoly f1 = f_at("x1", "y1");
    for (unsigned i = 1; m >= 2 && i <= m - 1; ++i) {
        MultiPoly zi = MultiPoly::variable(ring, "z" + std::to_string(i), spec.n);
        MultiPoly rhs = f1.pow(spec.n - 1) *
                        f_at("x" + std::to_string(i + 1), "y" + std::to_string(i + 1));
        t.quotient_relations.push_back(zi - rhs);
    }

    t.twist_eq = f1 * MultiPoly::variable(ring, "z", spec.n) - f_at("x", "y");

    for (unsigned i = 1; i <= m; ++i) {
        TwistPoint p{MultiPoly::variable(ring, "x" + std::to_string(i)),
                     MultiPoly::variable(ring, "y" + std::to_string(i)),
                     MultiPoly::constant(ring, Rational(1)),
                     MultiPoly::constant(ring, Rational(1))};
        if (i > 1) {
            p.z_num = MultiPoly::variable(ring, "w" + std::to_string(i));
            p.z_den = MultiPoly::variable(ring, "w1");
        }
        t.points.push_back(std::move(p));
    }
    return t;
}

std::vector<TwistPoint> twist_points(const TowerPresentation& tower) { return tower.points; }

CocycleTable cocycle(const CoverSpec& spec) {
    CocycleTable tab;
    tab.group_order = spec.n;
    for (unsigned j = 0; j < spec.n; ++j) tab.entries.push_back(j);

    // tau^j : (x, y, w) -> (x, y, zeta^j w). The affine equation must be
    // fixed (up to nothing: w^n picks up zeta^(jn) = 1), and tau^j must be
    // the identity exactly when j = 0.
    RingPtr aring = spec.affine_eq.ring();
    bool order_ok = true;
    for (unsigned j = 0; j < spec.n; ++j) {
        CycloNum zj = CycloNum::zeta(spec.n, j);
        MultiPoly image = spec.affine_eq.subst(
            {{"w", MultiPoly::variable(aring, "w") * MultiPoly::constant(aring, zj)}});
        if (image != spec.affine_eq) order_ok = false;
        bool is_id = zj == CycloNum(Rational(1));
        if (is_id != (j == 0)) order_ok = false;
    }
    tab.order_check_passed = order_ok;

    // Coefficient-fixing abelian action: the cocycle law reduces to
    // exponent addition mod n.
    bool law = true, inv = true;
    for (unsigned u = 0; u < spec.n; ++u) {
        for (unsigned v = 0; v < spec.n; ++v)
            if (tab.entries[(u + v) % spec.n] != (tab.entries[u] + tab.entries[v]) % spec.n)
                law = false;
        if ((tab.entries[u] + tab.entries[(spec.n - u) % spec.n]) % spec.n != 0) inv = false;
    }
    tab.cocycle_law_passed = law && tab.entries[0] == 0;
    tab.inverse_identity_passed = inv;

    for (unsigned j = 1; j < spec.n; ++j) {
        unsigned ord = spec.n / std::gcd(j, spec.n);
        if (ord < spec.n) tab.proper_power_orders.emplace_back(j, ord);
    }
    return tab;
}

PencilFactorResult pencil_factor(const PencilSpec& p) {
    auto rep1 = is_homogeneous(p.F1);
    auto rep2 = is_homogeneous(p.F2);
    if (!rep1.homogeneous || !rep2.homogeneous || rep1.degree != rep2.degree)
        throw precondition_error("F1 and F2 must be homogeneous of the same degree");
    if (p.points.size() != p.exponents.size())
        throw precondition_error("points and exponents must have equal length");
    unsigned s = static_cast<unsigned>(std::max(rep1.degree, 0L));
    unsigned ssum = std::accumulate(p.exponents.begin(), p.exponents.end(), 0u);
    if (p.ell == 0 || ssum % p.ell != 0)
        throw precondition_error("pencil divisibility violated: ell does not divide sum(s_i)");
    if (p.n % p.ell != 0)
        throw precondition_error("pencil divisibility violated: ell does not divide n");
    if (p.n == 0 || (static_cast<unsigned long>(s) * ssum) % p.n != 0)
        throw precondition_error("pencil divisibility violated: n does not divide s*sum(s_i)");

    MultiPoly F1a = dehomogenize(p.F1, "u0");
    MultiPoly F2a = dehomogenize(p.F2, "u0");
    RingPtr xy = make_ring({"x", "y"});
    auto to_xy = [&](const MultiPoly& g) {
        return g.subst({{"u1", MultiPoly::variable(xy, "x")}, {"u2", MultiPoly::variable(xy, "y")}})
            .in_ring(xy);
    };
    MultiPoly f = MultiPoly::constant(xy, Rational(1));
    RingPtr vr = make_ring({"v0", "v1", "v2"});
    MultiPoly prod_v = MultiPoly::constant(vr, Rational(1));
    for (size_t i = 0; i < p.points.size(); ++i) {
        const auto& [ai, bi] = p.points[i];
        MultiPoly lin = to_xy(F1a) * MultiPoly::constant(xy, bi) -
                        to_xy(F2a) * MultiPoly::constant(xy, ai);
        f *= lin.pow(p.exponents[i]);
        MultiPoly lv = MultiPoly::variable(vr, "v0") * MultiPoly::constant(vr, bi) -
                       MultiPoly::variable(vr, "v1") * MultiPoly::constant(vr, ai);
        prod_v *= lv.pow(p.exponents[i]);
    }
    return {f, MultiPoly::variable(vr, "v2", p.ell) - prod_v};
}

}  // namespace albtwist
