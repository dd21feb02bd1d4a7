#pragma once

#include <optional>
#include <vector>

#include "trs/term.hpp"

namespace trs {

/// A term rewrite system: a signature and an ordered list of rules, all
/// well-formed over the signature (checked at construction).
class Trs {
public:
    Trs(Signature sig, std::vector<Rule> rules);

    const Signature& sig() const { return sig_; }
    const std::vector<Rule>& rules() const { return rules_; }

private:
    Signature sig_;
    std::vector<Rule> rules_;
};

/// Witness of one rewrite step: which rule fired, where, with which
/// matching substitution, and the resulting term. Replaying the step
/// (substitute into the rhs, splice back at the position) reproduces
/// `result`.
struct RewriteStep {
    std::size_t rule_index;
    Position position;
    Substitution subst;
    Term result;
};

/// All one-step successors of t: every rule at every position. Enumeration
/// order is positions in pre-order, rules in list order within a position,
/// so hd_reducts is always a prefix of reducts.
std::vector<RewriteStep> reducts(const Trs& R, const Term& t);

/// Successors by root steps only.
std::vector<RewriteStep> hd_reducts(const Trs& R, const Term& t);

/// Successors by steps strictly below the root.
std::vector<RewriteStep> int_reducts(const Trs& R, const Term& t);

/// Bounded search for a looping derivation: explores rewrite traces of
/// length <= depth from each seed and reports the first trace t0 -> ... -> tk
/// in which some earlier ti matches a subterm of tk. A found trace proves
/// non-termination; exhaustion proves nothing.
std::optional<std::vector<Term>> bounded_search_nonterm(const Trs& R,
                                                        const std::vector<Term>& seeds,
                                                        int depth);

} // namespace trs
