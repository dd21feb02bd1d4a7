#include "trs/term.hpp"

#include <algorithm>

namespace trs {

std::string to_string(const Symbol& f) {
    return f.marked ? f.name + "#" : f.name;
}

void Signature::add(const Symbol& f, int arity) {
    auto it = arity_.find(f);
    if (it != arity_.end()) {
        if (it->second != arity) throw ArityConflict(to_string(f));
        return;
    }
    arity_.emplace(f, arity);
    order_.emplace_back(f, arity);
}

bool Signature::contains(const Symbol& f) const { return arity_.count(f) != 0; }

std::optional<int> Signature::arity(const Symbol& f) const {
    auto it = arity_.find(f);
    if (it == arity_.end()) return std::nullopt;
    return it->second;
}

std::optional<Symbol> Signature::first_constant() const {
    for (const auto& [f, n] : order_)
        if (n == 0) return f;
    return std::nullopt;
}

Term Term::var(int index) {
    return Term(std::make_shared<const Node>(Node{true, index, Symbol{}, {}}));
}

Term Term::app_unchecked(Symbol f, std::vector<Term> args) {
    return Term(std::make_shared<const Node>(Node{false, 0, std::move(f), std::move(args)}));
}

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_) return true;
    if (node_->is_var != other.node_->is_var) return false;
    if (node_->is_var) return node_->var == other.node_->var;
    if (node_->sym != other.node_->sym) return false;
    if (node_->args.size() != other.node_->args.size()) return false;
    for (std::size_t i = 0; i < node_->args.size(); ++i)
        if (node_->args[i] != other.node_->args[i]) return false;
    return true;
}

Term mk_app(const Signature& sig, const Symbol& f, std::vector<Term> args) {
    auto n = sig.arity(f);
    if (!n) throw UnknownSymbol(to_string(f));
    if (*n != static_cast<int>(args.size()))
        throw ArityMismatch(to_string(f), *n, static_cast<int>(args.size()));
    return Term::app_unchecked(f, std::move(args));
}

bool well_formed(const Signature& sig, const Term& t) {
    if (t.is_var()) return true;
    auto n = sig.arity(t.root());
    if (!n || *n != static_cast<int>(t.args().size())) return false;
    return std::all_of(t.args().begin(), t.args().end(),
                       [&](const Term& s) { return well_formed(sig, s); });
}

namespace {

void collect_vars(const Term& t, std::set<int>& out) {
    if (t.is_var()) {
        out.insert(t.var_index());
        return;
    }
    for (const Term& s : t.args()) collect_vars(s, out);
}

} // namespace

std::set<int> vars(const Term& t) {
    std::set<int> out;
    collect_vars(t, out);
    return out;
}

int maxvar(const Term& t) {
    if (t.is_var()) return t.var_index();
    int m = 0;
    for (const Term& s : t.args()) m = std::max(m, maxvar(s));
    return m;
}

Substitution Substitution::single(int x, Term t) {
    Substitution s;
    s.bind(x, std::move(t));
    return s;
}

void Substitution::bind(int x, Term t) { map_.insert_or_assign(x, std::move(t)); }

const Term* Substitution::find(int x) const {
    auto it = map_.find(x);
    return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
    if (map_.empty()) return t;
    if (t.is_var()) {
        const Term* bound = find(t.var_index());
        return bound ? *bound : t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& s : t.args()) args.push_back(apply(s));
    return Term::app_unchecked(t.root(), std::move(args));
}

Substitution compose(const Substitution& first, const Substitution& second) {
    Substitution out;
    for (const auto& [x, t] : first.bindings()) out.bind(x, second.apply(t));
    for (const auto& [x, t] : second.bindings())
        if (!first.find(x)) out.bind(x, t);
    return out;
}

struct Context::Node {
    Symbol sym;
    std::vector<Term> before;
    Context inner;
    std::vector<Term> after;
};

Context Context::hole() { return Context{}; }

Context Context::node_unchecked(Symbol f, std::vector<Term> before, Context inner,
                                std::vector<Term> after) {
    Context c;
    c.node_ = std::make_shared<const Node>(
        Node{std::move(f), std::move(before), std::move(inner), std::move(after)});
    return c;
}

Term Context::fill(const Term& t) const {
    if (is_hole()) return t;
    std::vector<Term> args = node_->before;
    args.push_back(node_->inner.fill(t));
    args.insert(args.end(), node_->after.begin(), node_->after.end());
    return Term::app_unchecked(node_->sym, std::move(args));
}

Position Context::hole_position() const {
    Position p;
    const Context* c = this;
    while (!c->is_hole()) {
        p.push_back(static_cast<int>(c->node_->before.size()));
        c = &c->node_->inner;
    }
    return p;
}

Context mk_context(const Signature& sig, const Symbol& f, std::vector<Term> before,
                   Context inner, std::vector<Term> after) {
    auto n = sig.arity(f);
    if (!n) throw UnknownSymbol(to_string(f));
    int got = static_cast<int>(before.size() + 1 + after.size());
    if (*n != got) throw ArityMismatch(to_string(f), *n, got);
    return Context::node_unchecked(f, std::move(before), std::move(inner), std::move(after));
}

namespace {

void collect_subterms(const Term& t, Position& here,
                      std::vector<std::pair<Position, Term>>& out) {
    out.emplace_back(here, t);
    if (t.is_var()) return;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        here.push_back(static_cast<int>(i));
        collect_subterms(t.args()[i], here, out);
        here.pop_back();
    }
}

} // namespace

std::vector<std::pair<Position, Term>> subterms(const Term& t) {
    std::vector<std::pair<Position, Term>> out;
    Position here;
    collect_subterms(t, here, out);
    return out;
}

std::optional<Term> subterm_at(const Term& t, const Position& p) {
    Term cur = t;
    for (int i : p) {
        if (cur.is_var() || i < 0 || i >= static_cast<int>(cur.args().size()))
            return std::nullopt;
        cur = cur.args()[i];
    }
    return cur;
}

Term replace_at(const Term& t, const Position& p, const Term& u) {
    if (p.empty()) return u;
    std::vector<Term> args = t.args();
    int i = p.front();
    args[i] = replace_at(args[i], Position(p.begin() + 1, p.end()), u);
    return Term::app_unchecked(t.root(), std::move(args));
}

Context context_at(const Term& t, const Position& p) {
    if (p.empty()) return Context::hole();
    int i = p.front();
    std::vector<Term> before(t.args().begin(), t.args().begin() + i);
    std::vector<Term> after(t.args().begin() + i + 1, t.args().end());
    Context inner = context_at(t.args()[i], Position(p.begin() + 1, p.end()));
    return Context::node_unchecked(t.root(), std::move(before), std::move(inner),
                                   std::move(after));
}

bool is_strict_subterm(const Term& s, const Term& t) {
    if (t.is_var()) return false;
    for (const Term& a : t.args())
        if (a == s || is_strict_subterm(s, a)) return true;
    return false;
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& s) {
    if (pattern.is_var()) {
        const Term* bound = s.find(pattern.var_index());
        if (bound) return *bound == subject;
        s.bind(pattern.var_index(), subject);
        return true;
    }
    if (subject.is_var()) return false;
    if (pattern.root() != subject.root()) return false;
    if (pattern.args().size() != subject.args().size()) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_into(pattern.args()[i], subject.args()[i], s)) return false;
    return true;
}

} // namespace

std::optional<Substitution> match_term(const Term& pattern, const Term& subject) {
    Substitution s;
    if (!match_into(pattern, subject, s)) return std::nullopt;
    return s;
}

std::string to_string(const Term& t) {
    return to_string(t, [](int i) { return "x" + std::to_string(i); });
}

std::string to_string(const Term& t, const VarNamer& namer) {
    if (t.is_var()) return namer(t.var_index());
    std::string out = to_string(t.root());
    if (t.args().empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i > 0) out += ",";
        out += to_string(t.args()[i], namer);
    }
    out += ")";
    return out;
}

std::string to_string(const Rule& r) {
    return to_string(r.lhs) + " -> " + to_string(r.rhs);
}

std::string to_string(const Rule& r, const VarNamer& namer) {
    return to_string(r.lhs, namer) + " -> " + to_string(r.rhs, namer);
}

} // namespace trs
