#pragma once

// Shared fixtures, random generators and brute-force oracles for the test
// suites. Oracles are deliberately naive and independent of the library
// code paths they check.

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trs/checker.hpp"
#include "trs/dp.hpp"
#include "trs/graph.hpp"
#include "trs/io.hpp"
#include "trs/polyint.hpp"
#include "trs/rewrite.hpp"
#include "trs/term.hpp"
#include "trs/unify.hpp"

namespace support {

inline std::string data_path(const std::string& name) {
    return std::string(TESTS_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// ---------------------------------------------------------------------------
// The quot/minus system over unary naturals and its interpretation
// ---------------------------------------------------------------------------

struct Quot {
    trs::Symbol zero{"zero"}, succ{"succ"}, minus{"minus"}, quot{"quot"};
    trs::Symbol minus_m{"minus", true}, quot_m{"quot", true};

    trs::Signature sig = make_sig();
    trs::Signature sharped = trs::sharp_signature(sig);
    trs::Trs system = make_system(sig);

    static trs::Signature make_sig() {
        trs::Signature s;
        s.add({"zero"}, 0);
        s.add({"succ"}, 1);
        s.add({"minus"}, 1);
        s.add({"quot"}, 2);
        return s;
    }

    trs::Term v(int i) const { return trs::Term::var(i); }
    trs::Term z() const { return trs::mk_app(sig, zero, {}); }
    trs::Term s(trs::Term t) const { return trs::mk_app(sig, succ, {std::move(t)}); }
    trs::Term m(trs::Term t) const { return trs::mk_app(sig, minus, {std::move(t)}); }
    trs::Term q(trs::Term a, trs::Term b) const {
        return trs::mk_app(sig, quot, {std::move(a), std::move(b)});
    }
    trs::Term ms(trs::Term t) const { return trs::mk_app(sharped, minus_m, {std::move(t)}); }
    trs::Term qs(trs::Term a, trs::Term b) const {
        return trs::mk_app(sharped, quot_m, {std::move(a), std::move(b)});
    }

    static trs::Trs make_system(const trs::Signature& sig) {
        auto v = [](int i) { return trs::Term::var(i); };
        auto app = [&sig](const char* f, std::vector<trs::Term> args) {
            return trs::mk_app(sig, trs::Symbol{f}, std::move(args));
        };
        std::vector<trs::Rule> rules;
        rules.push_back({app("minus", {app("zero", {})}), app("zero", {})});
        rules.push_back({app("minus", {app("succ", {v(0)})}),
                         app("succ", {app("minus", {v(0)})})});
        rules.push_back({app("quot", {app("zero", {}), app("succ", {v(0)})}),
                         app("zero", {})});
        rules.push_back({app("quot", {app("succ", {v(0)}), app("succ", {v(1)})}),
                         app("succ", {app("quot", {app("minus", {v(0)}),
                                                   app("succ", {v(1)})})})});
        return trs::Trs(sig, std::move(rules));
    }

    // marked dependency pairs, in mkdp order
    trs::Rule pair_minus() const { return {ms(s(v(0))), ms(v(0))}; }
    trs::Rule pair_quot_quot() const { return {qs(s(v(0)), s(v(1))), qs(m(v(0)), s(v(1)))}; }
    trs::Rule pair_quot_minus() const { return {qs(s(v(0)), s(v(1))), ms(v(0))}; }

    trs::PolyInterpretation interpretation() const {
        using trs::Int;
        using trs::Monomial;
        using trs::Polynomial;
        trs::PolyInterpretation pi;
        pi.set(zero, Polynomial(0));
        pi.set(succ, Polynomial(1, {{Int(1), Monomial::var(1, 0)}, {Int(2), Monomial::unit(1)}}));
        pi.set(minus, Polynomial(1, {{Int(1), Monomial::var(1, 0)}, {Int(1), Monomial::unit(1)}}));
        pi.set(quot, Polynomial(2, {{Int(1), Monomial{{1, 1}}},
                                    {Int(1), Monomial::var(2, 0)},
                                    {Int(1), Monomial::var(2, 1)}}));
        return pi;
    }
};

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

inline int below(std::mt19937& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned>(n));
}

/// Random term over the signature with the given depth budget; leaves are
/// variables 0..max_var or constants.
inline trs::Term random_term(std::mt19937& rng, const trs::Signature& sig, int depth,
                             int max_var) {
    std::vector<std::pair<trs::Symbol, int>> constants, proper;
    for (const auto& fn : sig.symbols())
        (fn.second == 0 ? constants : proper).push_back(fn);
    bool leaf = depth == 0 || proper.empty() || below(rng, 3) == 0;
    if (leaf) {
        if (constants.empty() || below(rng, 2) == 0)
            return trs::Term::var(below(rng, max_var + 1));
        return trs::Term::app_unchecked(constants[below(rng, (int)constants.size())].first, {});
    }
    auto [f, n] = proper[below(rng, (int)proper.size())];
    std::vector<trs::Term> args;
    for (int i = 0; i < n; ++i) args.push_back(random_term(rng, sig, depth - 1, max_var));
    return trs::Term::app_unchecked(f, std::move(args));
}

inline trs::Substitution random_subst(std::mt19937& rng, const trs::Signature& sig,
                                      int max_var, int depth) {
    trs::Substitution s;
    for (int x = 0; x <= max_var; ++x)
        if (below(rng, 2) == 0) s.bind(x, random_term(rng, sig, depth, max_var));
    return s;
}

/// All terms over sig with variables 0..nvars-1 up to the given depth
/// (constants and variables have depth 0).
inline std::vector<trs::Term> enumerate_terms(const trs::Signature& sig, int max_depth,
                                              int nvars) {
    std::vector<trs::Term> current; // depth <= d
    for (int x = 0; x < nvars; ++x) current.push_back(trs::Term::var(x));
    for (const auto& [f, n] : sig.symbols())
        if (n == 0) current.push_back(trs::Term::app_unchecked(f, {}));
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<trs::Term> next = current;
        for (const auto& [f, n] : sig.symbols()) {
            if (n == 0) continue;
            // all argument tuples drawn from `current`
            std::vector<int> idx(n, 0);
            for (;;) {
                std::vector<trs::Term> args;
                for (int i = 0; i < n; ++i) args.push_back(current[idx[i]]);
                trs::Term t = trs::Term::app_unchecked(f, std::move(args));
                if (std::find(next.begin(), next.end(), t) == next.end())
                    next.push_back(std::move(t));
                int i = n - 1;
                while (i >= 0 && ++idx[i] == static_cast<int>(current.size())) idx[i--] = 0;
                if (i < 0) break;
            }
        }
        current = std::move(next);
    }
    return current;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Strongly connected components by transitive-closure mutual reachability.
inline std::vector<std::set<int>> scc_oracle(const std::vector<std::vector<bool>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<bool>> reach = adj;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::vector<std::set<int>> classes;
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::set<int> cls{i};
        for (int j = i + 1; j < n; ++j)
            if (reach[i][j] && reach[j][i]) cls.insert(j);
        for (int j : cls) done[j] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Direct recursive interpretation of a term under a valuation; the
/// independent route against termpoly/peval.
inline trs::Int interp(const trs::PolyInterpretation& pi, const trs::Term& t,
                       const std::vector<trs::Int>& valuation) {
    if (t.is_var()) return valuation.at(t.var_index());
    const trs::Polynomial* p = pi.find(t.root());
    if (!p) throw std::runtime_error("no interpretation for " + trs::to_string(t.root()));
    std::vector<trs::Int> values;
    for (const trs::Term& s : t.args()) values.push_back(interp(pi, s, valuation));
    return trs::peval(*p, values);
}

/// Terms reachable by at most `steps` internal rewrite steps (including t).
inline std::vector<trs::Term> int_closure(const trs::Trs& R, const trs::Term& t, int steps) {
    std::vector<trs::Term> seen{t};
    std::vector<trs::Term> frontier{t};
    for (int i = 0; i < steps; ++i) {
        std::vector<trs::Term> next;
        for (const trs::Term& u : frontier)
            for (const trs::RewriteStep& step : trs::int_reducts(R, u))
                if (std::find(seen.begin(), seen.end(), step.result) == seen.end()) {
                    seen.push_back(step.result);
                    next.push_back(step.result);
                }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return seen;
}

/// The quantified form of decomposition validity: no edge from an earlier
/// component to a later one.
inline bool valid_decomp_oracle(const trs::EdgeFn& approx, const trs::Decomposition& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (const trs::Rule& b : cs[i])
                for (const trs::Rule& c : cs[j])
                    if (approx(b, c)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certificate XML builders (for the golden certificate and its mutants)
// ---------------------------------------------------------------------------

namespace certgen {

inline std::string xvar(int i) { return "<var>" + std::to_string(i) + "</var>"; }

inline std::string xapp(const std::string& fun, bool sharp,
                        const std::vector<std::string>& args) {
    std::string out = "<app><fun";
    if (sharp) out += " sharp=\"true\"";
    out += ">" + fun + "</fun>";
    for (const std::string& a : args) out += a;
    return out + "</app>";
}

inline std::string xrule(const std::string& lhs, const std::string& rhs) {
    return "<rule><lhs>" + lhs + "</lhs><rhs>" + rhs + "</rhs></rule>";
}

inline std::string mapping(const std::string& fun, const std::string& polynomial) {
    return "<fun>" + fun + "</fun><polynomial>" + polynomial + "</polynomial>";
}

inline std::string manna_ness(const std::string& poly_int,
                              const std::string& sub = "<trivial/>") {
    return "<manna_ness><poly_int>" + poly_int + "</poly_int>" + sub + "</manna_ness>";
}

inline std::string component(const std::string& rules, const std::string& proof = "") {
    return "<component><rules>" + rules + "</rules>" + proof + "</component>";
}

inline std::string decomp(const std::string& graph, const std::vector<std::string>& comps) {
    std::string out = "<decomp><graph>" + graph + "</graph>";
    for (const std::string& c : comps) out += c;
    return out + "</decomp>";
}

inline std::string dp(const std::string& sub) { return "<dp>" + sub + "</dp>"; }

// quot/minus pieces

inline std::string pair_minus_xml() {
    return xrule(xapp("minus", true, {xapp("succ", false, {xvar(0)})}),
                 xapp("minus", true, {xvar(0)}));
}

inline std::string pair_quot_quot_xml() {
    return xrule(xapp("quot", true,
                      {xapp("succ", false, {xvar(0)}), xapp("succ", false, {xvar(1)})}),
                 xapp("quot", true,
                      {xapp("minus", false, {xvar(0)}), xapp("succ", false, {xvar(1)})}));
}

inline std::string pair_quot_minus_xml() {
    return xrule(xapp("quot", true,
                      {xapp("succ", false, {xvar(0)}), xapp("succ", false, {xvar(1)})}),
                 xapp("minus", true, {xvar(0)}));
}

inline std::string linear_poly(int coef_x1, int constant) {
    std::string out;
    if (coef_x1 != 0)
        out += "<monomial coef=\"" + std::to_string(coef_x1) +
               "\"><exp var=\"1\" pow=\"1\"/></monomial>";
    if (constant != 0) out += "<monomial coef=\"" + std::to_string(constant) + "\"/>";
    return out;
}

inline std::string quot_default_poly() {
    return "<monomial coef=\"1\"><exp var=\"1\" pow=\"1\"/><exp var=\"2\" pow=\"1\"/></monomial>"
           "<monomial coef=\"1\"><exp var=\"1\" pow=\"1\"/></monomial>"
           "<monomial coef=\"1\"><exp var=\"2\" pow=\"1\"/></monomial>";
}

/// The golden polynomial block with overridable succ/minus entries.
inline std::string poly_int_quot(const std::string& succ_poly = linear_poly(1, 2),
                                 const std::string& minus_poly = linear_poly(1, 1),
                                 const std::string& quot_poly = quot_default_poly()) {
    return mapping("zero", "") + mapping("succ", succ_poly) + mapping("minus", minus_poly) +
           mapping("quot", quot_poly);
}

/// The accepted certificate for the quot/minus system; the parameters allow
/// the mutation suite to perturb one block at a time.
inline std::string quot_certificate(const std::string& block1 = poly_int_quot(),
                                    const std::string& block3 = poly_int_quot()) {
    return dp(decomp("<hde/>", {component(pair_minus_xml(), manna_ness(block1)),
                                component(pair_quot_minus_xml()),
                                component(pair_quot_quot_xml(), manna_ness(block3))}));
}

} // namespace certgen

} // namespace support
