#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trs/error.hpp"

namespace trs {

/// A function symbol. Identity is the pair (name, marked): the marked
/// variant of a symbol (printed with a trailing '#') is a distinct symbol
/// with the same arity, introduced by the dependency-pair transformation.
struct Symbol {
    std::string name;
    bool marked = false;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

std::string to_string(const Symbol& f);

/// Finite set of symbols with their arities. Insertion order is preserved
/// so printed output is deterministic.
class Signature {
public:
    Signature() = default;

    /// Registers f with the given arity. Re-adding with the same arity is a
    /// no-op; a different arity throws ArityConflict.
    void add(const Symbol& f, int arity);

    bool contains(const Symbol& f) const;
    std::optional<int> arity(const Symbol& f) const;

    const std::vector<std::pair<Symbol, int>>& symbols() const { return order_; }

    /// First nullary symbol in insertion order, if any.
    std::optional<Symbol> first_constant() const;

private:
    std::vector<std::pair<Symbol, int>> order_;
    std::map<Symbol, int> arity_;
};

using Position = std::vector<int>;

/// First-order term: a variable (natural-number index) or a symbol applied
/// to a list of subterms. Terms are immutable and share structure; copying
/// is cheap.
///
/// Arity correctness is not carried by the type itself but enforced at the
/// checked constructor mk_app(); code that restructures existing well-formed
/// terms (substitution, filling) uses the unchecked constructor, which
/// preserves well-formedness.
class Term {
public:
    static Term var(int index);
    static Term app_unchecked(Symbol f, std::vector<Term> args);

    bool is_var() const { return node_->is_var; }
    bool is_app() const { return !node_->is_var; }

    int var_index() const { return node_->var; }
    const Symbol& root() const { return node_->sym; }
    const std::vector<Term>& args() const { return node_->args; }

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

private:
    struct Node {
        bool is_var;
        int var;
        Symbol sym;
        std::vector<Term> args;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Checked application constructor: throws UnknownSymbol if f is not in sig
/// and ArityMismatch if the argument count is wrong.
Term mk_app(const Signature& sig, const Symbol& f, std::vector<Term> args);

/// Recursive audit that every application node satisfies the signature
/// arity.
bool well_formed(const Signature& sig, const Term& t);

/// Set of variable indices occurring in t.
std::set<int> vars(const Term& t);

/// Largest variable index in t; 0 for ground terms. Fresh indices are
/// always taken strictly above maxvar, so the ground convention is safe.
int maxvar(const Term& t);

/// Finite map from variable indices to terms; absent indices denote
/// themselves.
class Substitution {
public:
    Substitution() = default;

    static Substitution single(int x, Term t);

    void bind(int x, Term t);
    const Term* find(int x) const;
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const std::map<int, Term>& bindings() const { return map_; }

    /// Homomorphic application; ground terms are returned unchanged.
    Term apply(const Term& t) const;

    bool operator==(const Substitution& other) const { return map_ == other.map_; }

private:
    std::map<int, Term> map_;
};

/// Sequencing: (first; second)(x) = second(first(x)).
Substitution compose(const Substitution& first, const Substitution& second);

/// A term with a unique hole. Hole positions are well-formed by
/// construction when built through mk_context or context_at.
class Context {
public:
    static Context hole();
    static Context node_unchecked(Symbol f, std::vector<Term> before, Context inner,
                                  std::vector<Term> after);

    bool is_hole() const { return node_ == nullptr; }

    /// Replaces the hole by t.
    Term fill(const Term& t) const;

    /// Position of the hole.
    Position hole_position() const;

private:
    struct Node; // defined in term.cpp (contains a Context by value)

    std::shared_ptr<const Node> node_;
};

/// Checked context constructor: before.size() + 1 + after.size() must equal
/// arity(f).
Context mk_context(const Signature& sig, const Symbol& f, std::vector<Term> before,
                   Context inner, std::vector<Term> after);

/// All subterms of t in pre-order, with their positions; t itself appears
/// first at the empty position.
std::vector<std::pair<Position, Term>> subterms(const Term& t);

/// Subterm of t at position p, if p is valid.
std::optional<Term> subterm_at(const Term& t, const Position& p);

/// Replaces the subterm at position p by u. Position must be valid.
Term replace_at(const Term& t, const Position& p, const Term& u);

/// Context whose hole sits at position p of t. Position must be valid.
Context context_at(const Term& t, const Position& p);

/// True iff s occurs in t at a non-empty position.
bool is_strict_subterm(const Term& s, const Term& t);

/// Syntactic matching: the unique substitution on vars(pattern) sending
/// pattern to subject, or nullopt.
std::optional<Substitution> match_term(const Term& pattern, const Term& subject);

/// Rewrite rule. Lhs-not-a-variable and variable preservation are checked
/// by the dependency-pair preconditions, not at construction.
struct Rule {
    Term lhs;
    Term rhs;

    bool operator==(const Rule& other) const {
        return lhs == other.lhs && rhs == other.rhs;
    }
};

/// Renders a term as name(arg,...); variables print through `namer`
/// (default x0, x1, ...), marked symbols with a '#' suffix.
using VarNamer = std::function<std::string(int)>;
std::string to_string(const Term& t);
std::string to_string(const Term& t, const VarNamer& namer);
std::string to_string(const Rule& r);
std::string to_string(const Rule& r, const VarNamer& namer);

} // namespace trs
