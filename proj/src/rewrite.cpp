#include "trs/rewrite.hpp"

namespace trs {

Trs::Trs(Signature sig, std::vector<Rule> rules)
    : sig_(std::move(sig)), rules_(std::move(rules)) {
    for (const Rule& r : rules_) {
        if (!well_formed(sig_, r.lhs) || !well_formed(sig_, r.rhs))
            throw Error("ill_formed_rule", "rule not well-formed over signature: " + to_string(r));
    }
}

namespace {

void steps_at(const Trs& R, const Term& t, const Term& sub, const Position& pos,
              std::vector<RewriteStep>& out) {
    for (std::size_t i = 0; i < R.rules().size(); ++i) {
        const Rule& rule = R.rules()[i];
        auto m = match_term(rule.lhs, sub);
        if (!m) continue;
        Term result = replace_at(t, pos, m->apply(rule.rhs));
        out.push_back(RewriteStep{i, pos, std::move(*m), std::move(result)});
    }
}

} // namespace

std::vector<RewriteStep> reducts(const Trs& R, const Term& t) {
    std::vector<RewriteStep> out;
    for (const auto& [pos, sub] : subterms(t)) steps_at(R, t, sub, pos, out);
    return out;
}

std::vector<RewriteStep> hd_reducts(const Trs& R, const Term& t) {
    std::vector<RewriteStep> out;
    steps_at(R, t, t, {}, out);
    return out;
}

std::vector<RewriteStep> int_reducts(const Trs& R, const Term& t) {
    std::vector<RewriteStep> out;
    for (const auto& [pos, sub] : subterms(t)) {
        if (pos.empty()) continue;
        steps_at(R, t, sub, pos, out);
    }
    return out;
}

namespace {

// A trace loops when the newest term embeds an instance of an earlier one.
bool embeds_instance_of(const Term& earlier, const Term& later) {
    for (const auto& [pos, sub] : subterms(later))
        if (match_term(earlier, sub)) return true;
    return false;
}

bool search(const Trs& R, std::vector<Term>& trace, int remaining,
            std::optional<std::vector<Term>>& found) {
    const Term& last = trace.back();
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        if (embeds_instance_of(trace[i], last)) {
            found = trace;
            return true;
        }
    }
    if (remaining == 0) return false;
    for (const RewriteStep& step : reducts(R, last)) {
        trace.push_back(step.result);
        if (search(R, trace, remaining - 1, found)) return true;
        trace.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Term>> bounded_search_nonterm(const Trs& R,
                                                        const std::vector<Term>& seeds,
                                                        int depth) {
    std::optional<std::vector<Term>> found;
    for (const Term& seed : seeds) {
        std::vector<Term> trace{seed};
        if (search(R, trace, depth, found)) return found;
    }
    return std::nullopt;
}

} // namespace trs
