#include "albtwist/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace albtwist {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // lexicographic, earlier variables dominate; "less" means smaller term
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::optional<size_t> Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) { return std::make_shared<Ring>(std::move(vars)); }

MultiPoly MultiPoly::constant(RingPtr ring, const CycloNum& c) {
    MultiPoly p(std::move(ring));
    p.add_term(Exponents(p.ring_->arity(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name, unsigned power) {
    auto idx = ring->index_of(name);
    if (!idx) throw precondition_error("unknown variable: " + name);
    MultiPoly p(std::move(ring));
    Exponents e(p.ring_->arity(), 0);
    e[*idx] = power;
    p.add_term(e, CycloNum(Rational(1)));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
}

CycloNum MultiPoly::constant_value() const {
    if (terms_.empty()) return CycloNum(Rational(0));
    if (!is_constant()) throw precondition_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

long MultiPoly::degree_in(const std::string& var) const {
    auto idx = ring_->index_of(var);
    if (!idx) return 0;
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[*idx]));
    return d;
}

CycloNum MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNum(Rational(0)) : it->second;
}

std::pair<Exponents, CycloNum> MultiPoly::leading_term() const {
    if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponents& e, const CycloNum& c) {
    if (c.is_zero()) return;
    if (e.size() != ring_->arity()) throw precondition_error("exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

RingPtr merged_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return a;
    std::vector<std::string> vars = a->vars();
    bool same = true;
    for (const auto& v : b->vars()) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            vars.push_back(v);
            same = false;
        }
    }
    if (same && vars.size() == a->arity()) return a;
    return make_ring(std::move(vars));
}

MultiPoly MultiPoly::in_ring(const RingPtr& bigger) const {
    if (bigger == ring_) return *this;
    // A variable missing from the target is tolerated as long as it is unused.
    constexpr size_t kAbsent = static_cast<size_t>(-1);
    std::vector<size_t> pos(ring_->arity(), kAbsent);
    for (size_t i = 0; i < ring_->arity(); ++i) {
        auto idx = bigger->index_of(ring_->vars()[i]);
        if (idx) pos[i] = *idx;
    }
    MultiPoly r(bigger);
    for (const auto& [e, c] : terms_) {
        Exponents ne(bigger->arity(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] == kAbsent)
                throw precondition_error("target ring is missing variable " + ring_->vars()[i]);
            ne[pos[i]] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
    RingPtr r = merged_ring(a.ring(), b.ring());
    return {a.in_ring(r), b.in_ring(r)};
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = align(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = align(a, b);
    MultiPoly r(x.ring_);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const CycloNum& c) const {
    MultiPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = MultiPoly::constant(ring_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        if (e >>= 1) base *= base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

MultiPoly MultiPoly::subst(const std::map<std::string, MultiPoly>& assignment) const {
    RingPtr target = ring_;
    for (const auto& [name, value] : assignment) {
        if (!ring_->index_of(name))
            throw precondition_error("unknown variable in substitution: " + name);
        target = merged_ring(target, value.ring());
    }
    // Per-variable routing: untouched variables map straight to their target
    // slot; substituted ones point into `values` with a power cache, so each
    // value^e is expanded once and terms accumulate in place.
    const size_t k = ring_->arity();
    std::vector<long> repl(k, -1);
    std::vector<size_t> tidx(k, 0);
    std::vector<MultiPoly> values;
    for (size_t i = 0; i < k; ++i) {
        const std::string& name = ring_->vars()[i];
        auto it = assignment.find(name);
        if (it != assignment.end()) {
            repl[i] = static_cast<long>(values.size());
            values.push_back(it->second.in_ring(target));
        } else {
            tidx[i] = *target->index_of(name);
        }
    }
    std::map<std::pair<size_t, unsigned>, MultiPoly> powers;
    MultiPoly result(target);
    for (const auto& [e, c] : terms_) {
        Exponents ne(target->arity(), 0);
        const MultiPoly* acc = nullptr;
        MultiPoly acc_store;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (repl[i] < 0) {
                ne[tidx[i]] += e[i];
                continue;
            }
            auto key = std::make_pair(static_cast<size_t>(repl[i]), e[i]);
            auto pit = powers.find(key);
            if (pit == powers.end())
                pit = powers.emplace(key, values[repl[i]].pow(e[i])).first;
            if (!acc) {
                acc = &pit->second;
            } else {
                acc_store = *acc * pit->second;
                acc = &acc_store;
            }
        }
        if (!acc) {
            result.add_term(ne, c);
            continue;
        }
        for (const auto& [pe, pc] : acc->terms()) {
            Exponents fe = ne;
            for (size_t i = 0; i < fe.size(); ++i) fe[i] += pe[i];
            result.add_term(fe, pc * c);
        }
    }
    return result;
}

MultiPoly MultiPoly::subst(const std::map<std::string, CycloNum>& assignment) const {
    std::map<std::string, MultiPoly> polys;
    for (const auto& [name, value] : assignment)
        polys.emplace(name, MultiPoly::constant(ring_, value));
    return subst(polys);
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto idx = ring_->index_of(var);
    if (!idx) throw precondition_error("unknown variable: " + var);
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] == 0) continue;
        Exponents ne = e;
        ne[*idx] -= 1;
        r.add_term(ne, c * CycloNum(Rational(e[*idx])));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& var) const {
    auto idx = ring_->index_of(var);
    if (!idx) throw precondition_error("unknown variable: " + var);
    long d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0L)) + 1, MultiPoly(ring_));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        unsigned k = ne[*idx];
        ne[*idx] = 0;
        out[k].add_term(ne, c);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print leading term first (descending graded-lex)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool mono = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        std::string cs = c.to_string();
        bool negated = false;
        if (c.is_rational() && sgn(c.rational_value()) < 0) {
            negated = true;
            cs = rat_to_string(-c.rational_value());
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;
        bool wrap = !c.is_rational();
        bool unit_coeff = !wrap && cs == "1" && mono;
        if (wrap) out << "(" << c.to_string() << ")";
        else if (!unit_coeff) out << cs;
        bool emitted = wrap || !unit_coeff;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (emitted) out << "*";
            emitted = true;
            out << ring_->vars()[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

MultiPoly homogenize(const MultiPoly& f, const std::string& new_var) {
    if (f.ring()->index_of(new_var))
        throw precondition_error("homogenization variable already in ring: " + new_var);
    std::vector<std::string> vars = f.ring()->vars();
    vars.push_back(new_var);
    RingPtr target = make_ring(std::move(vars));
    long d = std::max(f.total_degree(), 0L);
    MultiPoly r(target);
    for (const auto& [e, c] : f.terms()) {
        Exponents ne = e;
        unsigned td = std::accumulate(e.begin(), e.end(), 0u);
        ne.push_back(static_cast<unsigned>(d) - td);
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly dehomogenize(const MultiPoly& f, const std::string& var) {
    return f.subst(std::map<std::string, CycloNum>{{var, CycloNum(Rational(1))}});
}

is_homogeneous_report is_homogeneous(const MultiPoly& p) {
    is_homogeneous_report rep;
    for (const auto& [e, c] : p.terms())
        rep.terms_by_degree[std::accumulate(e.begin(), e.end(), 0u)]++;
    rep.homogeneous = rep.terms_by_degree.size() <= 1;
    if (rep.homogeneous) rep.degree = p.total_degree();
    return rep;
}

namespace {

// Fraction-free Bareiss determinant; entries are polynomials, all divisions
// exact.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m, const RingPtr& ring) {
    const size_t n = m.size();
    if (n == 0) return MultiPoly::constant(ring, Rational(1));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(ring, Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(ring);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw precondition_error("Bareiss division failed (internal)");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(ring);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    long dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0)
        throw precondition_error("resultant: variable " + var + " must appear in both inputs");
    auto [a, b] = align(p, q);
    auto pc = a.coeffs_in(var);
    auto qc = b.coeffs_in(var);
    const RingPtr& ring = a.ring();
    size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
    for (long row = 0; row < dq; ++row)
        for (long j = 0; j <= dp; ++j) m[row][row + j] = pc[dp - j];
    for (long row = 0; row < dp; ++row)
        for (long j = 0; j <= dq; ++j) m[dq + row][row + j] = qc[dq - j];
    return bareiss_det(std::move(m), ring);
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    auto [r, d] = align(a, b);
    MultiPoly q(r.ring());
    auto [eb, cb] = d.leading_term();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading_term();
        Exponents e(er.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            e[i] = er[i] - eb[i];
        }
        MultiPoly t(r.ring());
        t.add_term(e, cr / cb);
        q += t;
        r -= t * d;
    }
    return q;
}

std::optional<MultiPoly> perfect_power_root(const MultiPoly& p, unsigned k, unsigned order) {
    if (k == 0) return std::nullopt;
    if (p.is_zero()) return MultiPoly(p.ring());
    auto [elead, clead] = p.leading_term();
    Exponents eroot(elead.size());
    for (size_t i = 0; i < eroot.size(); ++i) {
        if (elead[i] % k) return std::nullopt;
        eroot[i] = elead[i] / k;
    }
    // k-th root of the leading coefficient
    std::optional<CycloNum> croot;
    if (clead.is_rational()) {
        Rational c = clead.rational_value();
        // rational k-th root
        Integer nr, dr;
        if (mpz_root(nr.get_mpz_t(), Integer(abs(c.get_num())).get_mpz_t(), k) &&
            mpz_root(dr.get_mpz_t(), Integer(c.get_den()).get_mpz_t(), k)) {
            if (sgn(c) > 0 || k % 2 == 1) {
                Rational rr(sgn(c) < 0 ? -nr : nr, dr);
                rr.canonicalize();
                croot = CycloNum(rr);
            }
        }
        if (!croot && k == 2) croot = cyclo_sqrt_of_rational(c, order);
    }
    if (!croot) return std::nullopt;
    MultiPoly g(p.ring());
    g.add_term(eroot, *croot);
    // Successive term recovery: each new term of g is forced by the leading
    // term of the defect p - g^k.
    MultiPoly klead(p.ring());
    klead.add_term(eroot, *croot);
    for (size_t guard = 0; guard < p.terms().size() * k + 64; ++guard) {
        MultiPoly defect = p - g.pow(k);
        if (defect.is_zero()) return g;
        auto [ed, cd] = defect.leading_term();
        // t = lt(defect) / (k * lt(g)^(k-1))
        Exponents et(ed.size());
        for (size_t i = 0; i < et.size(); ++i) {
            unsigned need = eroot[i] * (k - 1);
            if (ed[i] < need) return std::nullopt;
            et[i] = ed[i] - need;
        }
        // must be strictly below the root's leading term
        if (!GradedLexLess{}(et, eroot)) return std::nullopt;
        MultiPoly t(p.ring());
        t.add_term(et, cd / (CycloNum(Rational(static_cast<long>(k))) * croot->pow(k - 1)));
        g += t;
    }
    return std::nullopt;
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    auto [x, y] = align(a, b);
    auto as_vec = [&](const MultiPoly& p) {
        auto cs = p.coeffs_in(var);
        std::vector<CycloNum> v;
        for (auto& c : cs) {
            if (!c.is_constant())
                throw precondition_error("univariate_gcd: coefficients involve other variables");
            v.push_back(c.constant_value());
        }
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    std::vector<CycloNum> r0 = as_vec(x), r1 = as_vec(y);
    while (!r1.empty()) {
        // r0 mod r1
        std::vector<CycloNum> rem = r0;
        while (rem.size() >= r1.size()) {
            if (rem.back().is_zero()) { rem.pop_back(); continue; }
            CycloNum c = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    MultiPoly g(x.ring());
    if (r0.empty()) return g;
    CycloNum lead = r0.back();
    for (size_t i = 0; i < r0.size(); ++i) {
        if (r0[i].is_zero()) continue;
        g += MultiPoly::variable(x.ring(), var, static_cast<unsigned>(i)) *
             MultiPoly::constant(x.ring(), r0[i] / lead);
    }
    return g;
}

void RelationSet::add(const std::string& var, unsigned exponent, MultiPoly rhs) {
    if (exponent < 1) throw precondition_error("relation exponent must be >= 1");
    for (const auto& r : rels_) {
        if (r.var == var) throw precondition_error("duplicate rewrite variable: " + var);
        if (rhs.involves(r.var) || r.rhs.involves(var))
            throw precondition_error("relation set is not triangular at variable " + var);
    }
    if (rhs.involves(var))
        throw precondition_error("relation right-hand side mentions its own variable " + var);
    rels_.push_back({var, exponent, std::move(rhs)});
}

NormalFormResult normal_form_traced(const MultiPoly& p, const RelationSet& rels) {
    RingPtr ring = p.ring();
    for (const auto& r : rels.relations()) ring = merged_ring(ring, r.rhs.ring());
    MultiPoly cur = p.in_ring(ring);
    size_t steps = 0;
    for (const auto& rel : rels.relations()) {
        auto idx = ring->index_of(rel.var);
        if (!idx) continue;
        MultiPoly rhs = rel.rhs.in_ring(ring);
        // Group terms by how many copies of the relation they absorb, so each
        // power of the right-hand side is expanded exactly once.
        std::map<unsigned, MultiPoly> buckets;
        for (const auto& [e, c] : cur.terms()) {
            unsigned q = e[*idx] / rel.exponent;
            Exponents ne = e;
            ne[*idx] = e[*idx] % rel.exponent;
            auto [it, inserted] = buckets.try_emplace(q, ring);
            it->second.add_term(ne, c);
            steps += q;
        }
        MultiPoly next(ring);
        MultiPoly rhs_pow = MultiPoly::constant(ring, Rational(1));
        unsigned cur_q = 0;
        for (auto& [q, part] : buckets) {
            for (; cur_q < q; ++cur_q) rhs_pow *= rhs;
            next += q == 0 ? part : part * rhs_pow;
        }
        cur = std::move(next);
    }
    return {std::move(cur), steps};
}

MultiPoly normal_form(const MultiPoly& p, const RelationSet& rels) {
    return normal_form_traced(p, rels).value;
}

}  // namespace albtwist
