#include "trs/checker.hpp"

#include "trs/dp.hpp"
#include "trs/graph.hpp"
#include "trs/unify.hpp"

namespace trs {

std::string to_string(GraphApprox a) {
    return a == GraphApprox::Hde ? "hde" : "unif";
}

ProofPtr make_proof(Proof p) { return std::make_shared<const Proof>(std::move(p)); }

namespace {

void collect_symbols(const Term& t, std::set<Symbol>& out) {
    if (t.is_var()) return;
    out.insert(t.root());
    for (const Term& s : t.args()) collect_symbols(s, out);
}

std::set<Symbol> rule_symbols(const std::vector<Rule>& rules) {
    std::set<Symbol> out;
    for (const Rule& r : rules) {
        collect_symbols(r.lhs, out);
        collect_symbols(r.rhs, out);
    }
    return out;
}

std::optional<StepError> check_monotonicity(const PolyInterpretation& pi, bool strict) {
    for (const auto& [f, p] : pi.entries()) {
        if (!coef_pos(p))
            return StepError{"not_weakly_monotone", "interpretation of '" + to_string(f) +
                                                        "' has a negative coefficient"};
        if (strict) {
            for (int i = 0; i < p.vars(); ++i)
                if (coef(Monomial::var(p.vars(), i), p) < 1)
                    return StepError{"not_strongly_monotone",
                                     "interpretation of '" + to_string(f) +
                                         "' is not strict in argument " + std::to_string(i + 1)};
        }
    }
    return std::nullopt;
}

std::optional<StepError> check_coverage(const PolyInterpretation& pi,
                                        const std::set<Symbol>& symbols) {
    for (const Symbol& f : symbols)
        if (!pi.find(f))
            return StepError{"missing_interpretation",
                             "no polynomial for symbol '" + to_string(f) + "'"};
    return std::nullopt;
}

std::optional<StepError> check_weak_compat(const PolyInterpretation& pi,
                                           const std::vector<Rule>& rules,
                                           const std::string& what) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!coef_pos(rule_poly_ge(pi, rules[i])))
            return StepError{"rule_not_weakly_compatible",
                             what + " " + std::to_string(i) +
                                 " not weakly compatible: " + to_string(rules[i])};
    }
    return std::nullopt;
}

std::vector<Rule> drop_strict(const PolyInterpretation& pi, const std::vector<Rule>& rules) {
    std::vector<Rule> remaining;
    for (const Rule& r : rules)
        if (!coef_pos(rule_poly_gt(pi, r))) remaining.push_back(r);
    return remaining;
}

} // namespace

std::variant<TopRelProblem, StepError> step_dp_trans(const Problem& p) {
    const auto* full = std::get_if<FullProblem>(&p);
    if (!full)
        return StepError{"not_a_full_problem",
                         "dependency-pair transformation applies to full problems only"};
    if (auto err = check_dp_preconditions(full->system))
        return StepError{"dp_precondition_failed", err->message()};
    MarkResult marked = mark(full->system, mkdp(full->system));
    return TopRelProblem{std::move(marked.rules), std::move(marked.pairs)};
}

std::variant<std::vector<DecompSubProblem>, StepError>
step_decomp(const Problem& p, GraphApprox approx,
            const std::vector<ProofComponent>& components) {
    const auto* rel = std::get_if<TopRelProblem>(&p);
    if (!rel)
        return StepError{"decomp_on_full_problem",
                         "graph decomposition applies to dependency-pair problems only"};

    const Trs& modulo = rel->modulo;
    EdgeFn edge;
    if (approx == GraphApprox::Hde)
        edge = [](const Rule& a, const Rule& b) { return hde_edge(a, b); };
    else
        edge = [&modulo](const Rule& a, const Rule& b) { return dpg_unif_edge(modulo, a, b); };

    Decomposition cs;
    cs.reserve(components.size());
    for (const ProofComponent& c : components) cs.push_back(c.pairs);

    if (auto err = check_decomposition(edge, rel->top, cs)) {
        std::string code = std::holds_alternative<MissingPair>(*err)   ? "missing_pair"
                           : std::holds_alternative<ExtraPair>(*err) ? "extra_pair"
                                                                     : "forward_edge";
        return StepError{code, describe(*err)};
    }

    std::vector<DecompSubProblem> subs;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const ProofComponent& c = components[i];
        if (c.sub) {
            subs.push_back(DecompSubProblem{i, TopRelProblem{modulo, c.pairs}, c.sub});
        } else if (!co_scc(edge, c.pairs)) {
            return StepError{"acyclic_check_failed",
                             "component " + std::to_string(i) +
                                 " is cyclic but carries no sub-proof"};
        }
    }
    return subs;
}

std::variant<Problem, StepError> step_poly_ord(const Problem& p, const PolyInterpretation& pi) {
    if (const auto* rel = std::get_if<TopRelProblem>(&p)) {
        if (auto err = check_monotonicity(pi, false)) return *err;
        std::set<Symbol> symbols = rule_symbols(rel->modulo.rules());
        std::set<Symbol> top_symbols = rule_symbols(rel->top);
        symbols.insert(top_symbols.begin(), top_symbols.end());
        if (auto err = check_coverage(pi, symbols)) return *err;
        if (auto err = check_weak_compat(pi, rel->modulo.rules(), "modulo rule")) return *err;
        if (auto err = check_weak_compat(pi, rel->top, "pair")) return *err;
        return Problem{TopRelProblem{rel->modulo, drop_strict(pi, rel->top)}};
    }
    const auto& full = std::get<FullProblem>(p);
    if (auto err = check_monotonicity(pi, true)) return *err;
    if (auto err = check_coverage(pi, rule_symbols(full.system.rules()))) return *err;
    if (auto err = check_weak_compat(pi, full.system.rules(), "rule")) return *err;
    return Problem{FullProblem{Trs(full.system.sig(), drop_strict(pi, full.system.rules()))}};
}

Verdict step_trivial(const Problem& p) {
    std::size_t remaining = std::holds_alternative<FullProblem>(p)
                                ? std::get<FullProblem>(p).system.rules().size()
                                : std::get<TopRelProblem>(p).top.size();
    if (remaining == 0) return Verdict::accept();
    return Verdict::reject(Rejection{{},
                                     "trivial_nonempty",
                                     std::to_string(remaining) + " rule(s) remain"});
}

namespace {

Verdict reject_at(std::vector<std::string> path, StepError e) {
    return Verdict::reject(Rejection{std::move(path), std::move(e.code), std::move(e.reason)});
}

Verdict check_at(const Problem& problem, const Proof& proof, std::vector<std::string> path);

Verdict check_sub(const Problem& problem, const ProofPtr& sub, std::vector<std::string> path) {
    if (!sub) return reject_at(std::move(path), StepError{"malformed_proof", "missing sub-proof"});
    return check_at(problem, *sub, std::move(path));
}

Verdict check_at(const Problem& problem, const Proof& proof, std::vector<std::string> path) {
    if (const auto* dp = std::get_if<DpTransStep>(&proof.step)) {
        path.push_back("dp");
        auto r = step_dp_trans(problem);
        if (auto* err = std::get_if<StepError>(&r)) return reject_at(std::move(path), *err);
        return check_sub(Problem{std::get<TopRelProblem>(std::move(r))}, dp->sub, std::move(path));
    }
    if (const auto* dc = std::get_if<DecompStep>(&proof.step)) {
        path.push_back("decomp");
        auto r = step_decomp(problem, dc->approx, dc->components);
        if (auto* err = std::get_if<StepError>(&r)) return reject_at(std::move(path), *err);
        for (const DecompSubProblem& sp : std::get<std::vector<DecompSubProblem>>(r)) {
            std::vector<std::string> sub_path = path;
            sub_path.push_back("component[" + std::to_string(sp.component_index) + "]");
            Verdict v = check_sub(Problem{sp.problem}, sp.sub, std::move(sub_path));
            if (!v.accepted()) return v;
        }
        return Verdict::accept();
    }
    if (const auto* po = std::get_if<PolyOrdStep>(&proof.step)) {
        path.push_back("manna_ness");
        auto r = step_poly_ord(problem, po->interpretation);
        if (auto* err = std::get_if<StepError>(&r)) return reject_at(std::move(path), *err);
        return check_sub(std::get<Problem>(std::move(r)), po->sub, std::move(path));
    }
    path.push_back("trivial");
    Verdict v = step_trivial(problem);
    if (v.accepted()) return v;
    Rejection r = v.rejection();
    r.path = std::move(path);
    return Verdict::reject(std::move(r));
}

} // namespace

Verdict check(const Problem& problem, const Proof& proof) {
    return check_at(problem, proof, {});
}

} // namespace trs
