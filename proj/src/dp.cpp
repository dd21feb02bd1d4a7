#include "trs/dp.hpp"

namespace trs {

DefinedSet defined_symbols(const Trs& R) {
    DefinedSet out;
    for (const Rule& r : R.rules())
        if (r.lhs.is_app()) out.insert(r.lhs.root());
    return out;
}

std::string DpPrecondError::message() const {
    switch (kind) {
    case Kind::VarLhs:
        return "rule " + std::to_string(rule_index) + " has a variable left-hand side";
    case Kind::FreshRhsVar:
        return "rule " + std::to_string(rule_index) + " introduces variable x" +
               std::to_string(variable) + " on the right-hand side";
    }
    return "";
}

std::optional<DpPrecondError> check_dp_preconditions(const Trs& R) {
    for (std::size_t i = 0; i < R.rules().size(); ++i) {
        const Rule& r = R.rules()[i];
        if (r.lhs.is_var())
            return DpPrecondError{DpPrecondError::Kind::VarLhs, i};
        std::set<int> lhs_vars = vars(r.lhs);
        for (int x : vars(r.rhs))
            if (!lhs_vars.count(x))
                return DpPrecondError{DpPrecondError::Kind::FreshRhsVar, i, x};
    }
    return std::nullopt;
}

namespace {

void collect_calls(const DefinedSet& defined, const Term& t, std::vector<Term>& out) {
    if (t.is_var()) return;
    if (defined.count(t.root())) out.push_back(t);
    for (const Term& s : t.args()) collect_calls(defined, s, out);
}

} // namespace

std::vector<Term> calls(const DefinedSet& defined, const Term& t) {
    std::vector<Term> out;
    collect_calls(defined, t, out);
    return out;
}

std::vector<Term> calls(const Trs& R, const Term& t) {
    return calls(defined_symbols(R), t);
}

std::vector<Rule> mkdp(const Trs& R) {
    DefinedSet defined = defined_symbols(R);
    std::vector<Rule> pairs;
    for (const Rule& r : R.rules()) {
        for (const Term& s : calls(defined, r.rhs)) {
            if (!is_strict_subterm(s, r.lhs)) pairs.push_back(Rule{r.lhs, s});
        }
    }
    return pairs;
}

Signature sharp_signature(const Signature& sig) {
    Signature out = sig;
    for (const auto& [f, n] : sig.symbols())
        out.add(Symbol{f.name, true}, n);
    return out;
}

namespace {

Term mark_root(const Term& t) {
    if (t.is_var())
        throw Error("root_is_variable", "cannot mark a pair whose side is a variable");
    return Term::app_unchecked(Symbol{t.root().name, true}, t.args());
}

} // namespace

MarkResult mark(const Trs& R, const std::vector<Rule>& pairs) {
    Signature sharped = sharp_signature(R.sig());
    std::vector<Rule> marked;
    marked.reserve(pairs.size());
    for (const Rule& p : pairs)
        marked.push_back(Rule{mark_root(p.lhs), mark_root(p.rhs)});
    return MarkResult{sharped, Trs(sharped, R.rules()), std::move(marked)};
}

namespace {

// Rebuilds the constructor part of t, emitting aliens in pre-order and
// substituting the next fresh variable for each occurrence.
Term cap_walk(const DefinedSet& defined, const Term& t, int& next_fresh,
              std::vector<Term>& aliens) {
    if (t.is_var()) return t;
    if (defined.count(t.root())) {
        aliens.push_back(t);
        return Term::var(next_fresh++);
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& s : t.args()) args.push_back(cap_walk(defined, s, next_fresh, aliens));
    return Term::app_unchecked(t.root(), std::move(args));
}

} // namespace

CapResult cap(const Trs& R, const Term& t) {
    DefinedSet defined = defined_symbols(R);
    std::vector<Term> aliens;
    int first_fresh = maxvar(t) + 1;
    int next_fresh = first_fresh;
    Term capped = cap_walk(defined, t, next_fresh, aliens);
    Substitution alien_subst;
    for (std::size_t i = 0; i < aliens.size(); ++i)
        alien_subst.bind(first_fresh + static_cast<int>(i), aliens[i]);
    return CapResult{static_cast<int>(aliens.size()), std::move(capped), std::move(aliens),
                     std::move(alien_subst)};
}

} // namespace trs
