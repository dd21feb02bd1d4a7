#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trs/term.hpp"

namespace trs {

/// Edge predicate over dependency pairs (an over-approximation of the
/// dependency graph).
using EdgeFn = std::function<bool(const Rule&, const Rule&)>;

/// Dependency graph over an explicit node list: adjacency[i][j] holds iff
/// the edge predicate connects node i to node j.
struct DpGraph {
    std::vector<Rule> nodes;
    std::vector<std::vector<bool>> adjacency;
};

DpGraph build_graph(const EdgeFn& approx, std::vector<Rule> nodes);

/// Strongly connected components, emitted in reverse-topological order: if
/// any edge leaves component A for a different component B, then B appears
/// before A. Within the output, discovery follows ascending node index, so
/// the order is deterministic.
std::vector<std::vector<int>> sccs(const DpGraph& g);

/// Ordered partition of a pair set into components.
using Decomposition = std::vector<std::vector<Rule>>;

/// True iff no edge goes from a component to any later one.
bool valid_decomp(const EdgeFn& approx, const Decomposition& cs);

/// True iff the approximation graph restricted to the component is acyclic
/// (every SCC a singleton without a self-edge). An acyclic component bounds
/// the length of call chains inside it and needs no further proof.
bool co_scc(const EdgeFn& approx, const std::vector<Rule>& component);

struct MissingPair {
    Rule pair; // in the pair set but absent from the decomposition
};
struct ExtraPair {
    Rule pair; // in the decomposition but not in the pair set
};
struct ForwardEdge {
    std::size_t from_component;
    std::size_t to_component;
    Rule from;
    Rule to;
};
using DecompError = std::variant<MissingPair, ExtraPair, ForwardEdge>;

std::string describe(const DecompError& e);

/// A decomposition is accepted iff it covers the pair set D exactly (as a
/// multiset, order-insensitive) and has no forward edge. Per-component
/// termination obligations are the caller's business.
std::optional<DecompError> check_decomposition(const EdgeFn& approx,
                                               const std::vector<Rule>& pairs,
                                               const Decomposition& cs);

} // namespace trs
