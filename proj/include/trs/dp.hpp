#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trs/rewrite.hpp"
#include "trs/term.hpp"

namespace trs {

/// Symbols heading some rule lhs; everything else is a constructor.
using DefinedSet = std::set<Symbol>;

DefinedSet defined_symbols(const Trs& R);

/// A rule set qualifies for the dependency-pair transformation only when no
/// lhs is a variable and every rhs variable also occurs in the lhs.
struct DpPrecondError {
    enum class Kind { VarLhs, FreshRhsVar };
    Kind kind;
    std::size_t rule_index;
    int variable = 0; // for FreshRhsVar

    std::string message() const;
};

std::optional<DpPrecondError> check_dp_preconditions(const Trs& R);

/// All subterms of t headed by a defined symbol, in pre-order, nested
/// occurrences and duplicates included.
std::vector<Term> calls(const Trs& R, const Term& t);
std::vector<Term> calls(const DefinedSet& defined, const Term& t);

/// Dependency pairs: for each rule l -> r, one pair l -> s per defined-headed
/// subterm s of r that is not a strict subterm of l; rule order first, call
/// order within a rule.
std::vector<Rule> mkdp(const Trs& R);

/// Signature extended with a marked duplicate of every symbol (same arity).
Signature sharp_signature(const Signature& sig);

struct MarkResult {
    Signature sig;           // sharped signature
    Trs rules;               // the input rules, re-typed over the sharped signature
    std::vector<Rule> pairs; // pairs with both root symbols marked
};

/// Replaces the root symbol on both sides of each pair by its marked
/// version. Throws Error("root_is_variable") if a pair side is a variable.
MarkResult mark(const Trs& R, const std::vector<Rule>& pairs);

/// Constructor cap of a term: defined-headed subterms (the aliens) are
/// replaced by the fresh variables maxvar(t)+1 ... maxvar(t)+k, assigned in
/// pre-order; alien_subst maps them back, so alien_subst(cap) reconstructs t.
struct CapResult {
    int alien_count;
    Term cap;
    std::vector<Term> aliens;
    Substitution alien_subst;
};

CapResult cap(const Trs& R, const Term& t);

} // namespace trs
