#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trs/polyint.hpp"
#include "trs/rewrite.hpp"
#include "trs/term.hpp"

namespace trs {

/// Termination of the full rewrite relation of a system.
struct FullProblem {
    Trs system;
};

/// Termination of top steps with `top` rules relative to unrestricted
/// rewriting with the `modulo` rules (the problem shape produced by the
/// dependency-pair transformation).
struct TopRelProblem {
    Trs modulo;
    std::vector<Rule> top;
};

using Problem = std::variant<FullProblem, TopRelProblem>;

enum class GraphApprox { Hde, Unif };

std::string to_string(GraphApprox a);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

/// Dependency-pair transformation; the sub-proof addresses the resulting
/// top-relative problem over the marked pairs.
struct DpTransStep {
    ProofPtr sub;
};

/// One block of a graph decomposition; a component without a sub-proof must
/// be acyclic under the chosen approximation.
struct ProofComponent {
    std::vector<Rule> pairs;
    ProofPtr sub; // null = no sub-proof
};

struct DecompStep {
    GraphApprox approx;
    std::vector<ProofComponent> components;
};

/// Rule removal by a polynomial interpretation; the sub-proof addresses the
/// problem with the strictly decreasing rules removed.
struct PolyOrdStep {
    PolyInterpretation interpretation;
    ProofPtr sub;
};

/// Claims the rule set under scrutiny is empty.
struct TrivialStep {};

struct Proof {
    std::variant<DpTransStep, DecompStep, PolyOrdStep, TrivialStep> step;
};

ProofPtr make_proof(Proof p);

/// Location and cause of a failed proof step. The path names the chain of
/// steps from the root down to the shallowest failing one.
struct Rejection {
    std::vector<std::string> path;
    std::string code;
    std::string reason;
};

class Verdict {
public:
    static Verdict accept() { return Verdict{}; }
    static Verdict reject(Rejection r) {
        Verdict v;
        v.rejection_ = std::move(r);
        return v;
    }

    bool accepted() const { return !rejection_.has_value(); }
    const Rejection& rejection() const { return *rejection_; }

private:
    std::optional<Rejection> rejection_;
};

/// Cause of a failed step, before path information is attached.
struct StepError {
    std::string code;
    std::string reason;
};

/// Applies the dependency-pair transformation: checks the preconditions and
/// emits the marked top-relative problem.
std::variant<TopRelProblem, StepError> step_dp_trans(const Problem& p);

/// Sub-problem produced by a decomposition component that carries a proof.
struct DecompSubProblem {
    std::size_t component_index;
    TopRelProblem problem;
    ProofPtr sub;
};

/// Validates a decomposition against the problem's pair set; proof-less
/// components are discharged by the acyclicity check, the rest become
/// sub-problems.
std::variant<std::vector<DecompSubProblem>, StepError>
step_decomp(const Problem& p, GraphApprox approx, const std::vector<ProofComponent>& components);

/// Rule removal: requires the monotonicity level demanded by the problem
/// shape, weak compatibility of every rule, and keeps exactly the rules
/// that are not strictly decreasing.
std::variant<Problem, StepError> step_poly_ord(const Problem& p,
                                               const PolyInterpretation& pi);

/// Accepts iff the rule set under scrutiny is empty.
Verdict step_trivial(const Problem& p);

/// Verifies a proof tree against a problem. Pure and total: the result is
/// Accepted or a Rejection naming the shallowest failing step.
Verdict check(const Problem& problem, const Proof& proof);

} // namespace trs
