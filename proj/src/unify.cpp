#include "trs/unify.hpp"

#include "trs/dp.hpp"

namespace trs {

namespace {

bool occurs(int x, const Term& t) {
    if (t.is_var()) return t.var_index() == x;
    for (const Term& s : t.args())
        if (occurs(x, s)) return true;
    return false;
}

// Extends s with x -> t, keeping s fully applied: t is already s-applied
// and x does not occur in t.
void extend(Substitution& s, int x, const Term& t) {
    Substitution step = Substitution::single(x, t);
    Substitution out;
    for (const auto& [y, u] : s.bindings()) out.bind(y, step.apply(u));
    out.bind(x, t);
    s = std::move(out);
}

bool unify_into(const Term& a, const Term& b, Substitution& s) {
    Term t = s.apply(a);
    Term u = s.apply(b);
    if (t == u) return true;
    if (t.is_var()) {
        if (occurs(t.var_index(), u)) return false;
        extend(s, t.var_index(), u);
        return true;
    }
    if (u.is_var()) {
        if (occurs(u.var_index(), t)) return false;
        extend(s, u.var_index(), t);
        return true;
    }
    if (t.root() != u.root() || t.args().size() != u.args().size()) return false;
    for (std::size_t i = 0; i < t.args().size(); ++i)
        if (!unify_into(t.args()[i], u.args()[i], s)) return false;
    return true;
}

} // namespace

std::optional<Substitution> unify(const Term& t, const Term& u) {
    Substitution s;
    if (!unify_into(t, u, s)) return std::nullopt;
    return s;
}

namespace {

Term ren_cap_walk(const DefinedSet& defined, int& next_fresh, const Term& t) {
    if (t.is_var() || defined.count(t.root())) return Term::var(next_fresh++);
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& s : t.args()) args.push_back(ren_cap_walk(defined, next_fresh, s));
    return Term::app_unchecked(t.root(), std::move(args));
}

} // namespace

Term ren_cap(const Trs& R, int next_fresh, const Term& t) {
    DefinedSet defined = defined_symbols(R);
    int counter = next_fresh;
    return ren_cap_walk(defined, counter, t);
}

bool connectable(const Trs& R, const Term& u, const Term& v) {
    return unify(ren_cap(R, maxvar(v) + 1, u), v).has_value();
}

bool hde_edge(const Rule& r1, const Rule& r2) {
    if (r1.rhs.is_var() || r2.lhs.is_var()) return true;
    return r1.rhs.root() == r2.lhs.root();
}

bool dpg_unif_edge(const Trs& R, const Rule& r1, const Rule& r2) {
    return connectable(R, r1.rhs, r2.lhs);
}

} // namespace trs
