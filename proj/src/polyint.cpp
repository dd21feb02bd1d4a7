#include "trs/polyint.hpp"

#include <algorithm>

namespace trs {

Monomial Monomial::unit(int vars) { return Monomial{std::vector<int>(vars, 0)}; }

Monomial Monomial::var(int vars, int i) {
    Monomial m = unit(vars);
    m.exps[i] = 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

Polynomial::Polynomial(int vars) : vars_(vars) {}

Polynomial::Polynomial(int vars, std::vector<std::pair<Int, Monomial>> entries)
    : vars_(vars) {
    for (auto& [c, m] : entries) {
        if (static_cast<int>(m.exps.size()) != vars)
            throw DimensionMismatch(vars, static_cast<int>(m.exps.size()));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [c, m] : entries) {
        if (!entries_.empty() && entries_.back().second == m)
            entries_.back().first += c;
        else
            entries_.emplace_back(std::move(c), std::move(m));
    }
    std::erase_if(entries_, [](const auto& e) { return e.first == 0; });
}

Polynomial Polynomial::constant(int vars, Int c) {
    return Polynomial(vars, {{std::move(c), Monomial::unit(vars)}});
}

Polynomial Polynomial::variable(int vars, int i) {
    return Polynomial(vars, {{Int(1), Monomial::var(vars, i)}});
}

Int coef(const Monomial& m, const Polynomial& p) {
    Int c = 0;
    for (const auto& [ci, mi] : p.entries())
        if (mi == m) c += ci;
    return c;
}

namespace {

void require_same_vars(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != q.vars()) throw DimensionMismatch(p.vars(), q.vars());
}

} // namespace

Polynomial padd(const Polynomial& p, const Polynomial& q) {
    require_same_vars(p, q);
    auto entries = p.entries();
    entries.insert(entries.end(), q.entries().begin(), q.entries().end());
    return Polynomial(p.vars(), std::move(entries));
}

Polynomial psub(const Polynomial& p, const Polynomial& q) {
    require_same_vars(p, q);
    auto entries = p.entries();
    for (const auto& [c, m] : q.entries()) entries.emplace_back(-c, m);
    return Polynomial(p.vars(), std::move(entries));
}

Polynomial pmul(const Polynomial& p, const Polynomial& q) {
    require_same_vars(p, q);
    std::vector<std::pair<Int, Monomial>> entries;
    for (const auto& [cp, mp] : p.entries()) {
        for (const auto& [cq, mq] : q.entries()) {
            Monomial m = mp;
            for (int i = 0; i < p.vars(); ++i) m.exps[i] += mq.exps[i];
            entries.emplace_back(cp * cq, std::move(m));
        }
    }
    return Polynomial(p.vars(), std::move(entries));
}

Polynomial ppower(const Polynomial& p, int k) {
    Polynomial out = Polynomial::constant(p.vars(), 1);
    for (int i = 0; i < k; ++i) out = pmul(out, p);
    return out;
}

Polynomial pcomp(const Polynomial& p, const std::vector<Polynomial>& qs) {
    if (static_cast<int>(qs.size()) != p.vars())
        throw DimensionMismatch(p.vars(), static_cast<int>(qs.size()));
    int m = qs.empty() ? 0 : qs.front().vars();
    for (const Polynomial& q : qs) require_same_vars(qs.front(), q);
    Polynomial out(m);
    for (const auto& [c, mono] : p.entries()) {
        Polynomial term = Polynomial::constant(m, c);
        for (int i = 0; i < p.vars(); ++i)
            if (mono.exps[i] > 0) term = pmul(term, ppower(qs[i], mono.exps[i]));
        out = padd(out, term);
    }
    return out;
}

Int peval(const Polynomial& p, const std::vector<Int>& values) {
    if (static_cast<int>(values.size()) != p.vars())
        throw DimensionMismatch(p.vars(), static_cast<int>(values.size()));
    Int total = 0;
    for (const auto& [c, m] : p.entries()) {
        Int term = c;
        for (int i = 0; i < p.vars(); ++i)
            for (int e = 0; e < m.exps[i]; ++e) term *= values[i];
        total += term;
    }
    return total;
}

void PolyInterpretation::set(const Symbol& f, Polynomial p) {
    entries_.insert_or_assign(f, std::move(p));
}

const Polynomial* PolyInterpretation::find(const Symbol& f) const {
    auto it = entries_.find(f);
    if (it != entries_.end()) return &it->second;
    if (f.marked) {
        it = entries_.find(Symbol{f.name, false});
        if (it != entries_.end()) return &it->second;
    }
    return nullptr;
}

BoundedTerm BoundedTerm::inject(const Term& t, int bound) {
    int m = maxvar(t);
    if (m > bound) throw BoundExceeded(m, bound);
    return BoundedTerm{t, bound};
}

namespace {

Polynomial termpoly_walk(const PolyInterpretation& pi, int nvars, const Term& t) {
    if (t.is_var()) return Polynomial::variable(nvars, t.var_index());
    const Polynomial* fp = pi.find(t.root());
    if (!fp)
        throw Error("missing_interpretation",
                    "no polynomial for symbol '" + to_string(t.root()) + "'");
    if (fp->vars() != static_cast<int>(t.args().size()))
        throw DimensionMismatch(fp->vars(), static_cast<int>(t.args().size()));
    std::vector<Polynomial> qs;
    qs.reserve(t.args().size());
    for (const Term& s : t.args()) qs.push_back(termpoly_walk(pi, nvars, s));
    if (qs.empty()) {
        // Nullary composition: reinterpret the constant in the ambient vars.
        Int c = fp->entries().empty() ? Int(0) : fp->entries().front().first;
        return Polynomial::constant(nvars, c);
    }
    return pcomp(*fp, qs);
}

} // namespace

Polynomial termpoly(const PolyInterpretation& pi, const BoundedTerm& t) {
    return termpoly_walk(pi, t.bound + 1, t.term);
}

Polynomial termpoly(const PolyInterpretation& pi, int bound, const Term& t) {
    return termpoly(pi, BoundedTerm::inject(t, bound));
}

Polynomial rule_poly_ge(const PolyInterpretation& pi, const Rule& r) {
    int k = std::max(maxvar(r.lhs), maxvar(r.rhs));
    return psub(termpoly(pi, k, r.lhs), termpoly(pi, k, r.rhs));
}

Polynomial rule_poly_gt(const PolyInterpretation& pi, const Rule& r) {
    Polynomial ge = rule_poly_ge(pi, r);
    return psub(ge, Polynomial::constant(ge.vars(), 1));
}

bool coef_pos(const Polynomial& p) {
    for (const auto& [c, m] : p.entries())
        if (c < 0) return false;
    return true;
}

bool weak_monotone(const PolyInterpretation& pi) {
    for (const auto& [f, p] : pi.entries())
        if (!coef_pos(p)) return false;
    return true;
}

bool strong_monotone(const PolyInterpretation& pi) {
    if (!weak_monotone(pi)) return false;
    for (const auto& [f, p] : pi.entries())
        for (int i = 0; i < p.vars(); ++i)
            if (coef(Monomial::var(p.vars(), i), p) < 1) return false;
    return true;
}

std::string to_string(const Polynomial& p) {
    if (p.entries().empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.entries().size(); ++k) {
        const auto& [c, m] = p.entries()[k];
        if (k > 0) out += " + ";
        std::string mono;
        for (int i = 0; i < p.vars(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!mono.empty()) mono += ".";
            mono += "x" + std::to_string(i + 1);
            if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
        }
        if (mono.empty())
            out += c.str();
        else if (c == 1)
            out += mono;
        else
            out += c.str() + "." + mono;
    }
    return out;
}

} // namespace trs
