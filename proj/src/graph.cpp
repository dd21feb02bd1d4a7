#include "trs/graph.hpp"

#include <algorithm>

namespace trs {

DpGraph build_graph(const EdgeFn& approx, std::vector<Rule> nodes) {
    std::size_t n = nodes.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[i][j] = approx(nodes[i], nodes[j]);
    return DpGraph{std::move(nodes), std::move(adj)};
}

namespace {

// Tarjan; components pop in reverse-topological order.
struct SccState {
    const DpGraph& g;
    std::vector<int> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int counter = 0;
    std::vector<std::vector<int>> out;

    explicit SccState(const DpGraph& g)
        : g(g), index(g.nodes.size(), -1), lowlink(g.nodes.size(), 0),
          on_stack(g.nodes.size(), false) {}

    void visit(int v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w = 0; w < static_cast<int>(g.nodes.size()); ++w) {
            if (!g.adjacency[v][w]) continue;
            if (index[w] == -1) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<int> component;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            out.push_back(std::move(component));
        }
    }
};

} // namespace

std::vector<std::vector<int>> sccs(const DpGraph& g) {
    SccState state(g);
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
        if (state.index[v] == -1) state.visit(v);
    return state.out;
}

bool valid_decomp(const EdgeFn& approx, const Decomposition& cs) {
    // Matches the recursive fold: the tail must be valid and no rule of the
    // head component may reach any later component.
    if (cs.empty()) return true;
    Decomposition tail(cs.begin() + 1, cs.end());
    if (!valid_decomp(approx, tail)) return false;
    for (const Rule& b : cs.front())
        for (const auto& cj : tail)
            for (const Rule& c : cj)
                if (approx(b, c)) return false;
    return true;
}

bool co_scc(const EdgeFn& approx, const std::vector<Rule>& component) {
    DpGraph g = build_graph(approx, component);
    for (const auto& comp : sccs(g)) {
        if (comp.size() > 1) return false;
        if (g.adjacency[comp[0]][comp[0]]) return false;
    }
    return true;
}

std::string describe(const DecompError& e) {
    if (const auto* m = std::get_if<MissingPair>(&e))
        return "pair missing from the decomposition: " + to_string(m->pair);
    if (const auto* x = std::get_if<ExtraPair>(&e))
        return "pair not in the problem: " + to_string(x->pair);
    const auto& f = std::get<ForwardEdge>(e);
    return "edge from component " + std::to_string(f.from_component) + " to later component " +
           std::to_string(f.to_component) + ": " + to_string(f.from) + "  ~>  " +
           to_string(f.to);
}

std::optional<DecompError> check_decomposition(const EdgeFn& approx,
                                               const std::vector<Rule>& pairs,
                                               const Decomposition& cs) {
    std::vector<Rule> flat;
    for (const auto& c : cs) flat.insert(flat.end(), c.begin(), c.end());

    auto count = [](const std::vector<Rule>& rs, const Rule& r) {
        return std::count_if(rs.begin(), rs.end(), [&](const Rule& s) { return s == r; });
    };
    for (const Rule& p : pairs)
        if (count(flat, p) < count(pairs, p)) return MissingPair{p};
    for (const Rule& p : flat)
        if (count(pairs, p) < count(flat, p)) return ExtraPair{p};

    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (const Rule& b : cs[i])
                for (const Rule& c : cs[j])
                    if (approx(b, c)) return ForwardEdge{i, j, b, c};
    return std::nullopt;
}

} // namespace trs
