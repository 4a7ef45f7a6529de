#pragma once

#include <optional>
#include <vector>

#include "mmvc/graph.hpp"

namespace mmvc {

// Default cap for the exponential exact searches (clique / independent set).
inline constexpr int kDefaultExactCap = 28;

struct RelabeledGraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for dropped vertices
    std::vector<int> new_to_old;
};

// Drops all degree-0 vertices; survivors keep their relative order.
RelabeledGraph remove_isolated(const Graph& g);

// Two-coloring via BFS in id order, or nullopt if an odd cycle exists.
// colors[v] in {0,1}; every component's least vertex gets color 0.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

// First-fit proper coloring along the given vertex order (a permutation of
// 0..n-1).  Uses at most max_degree+1 colors.
std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order);

struct TreeLevels {
    VertexSet even;                         // V0: even BFS depth (includes root)
    VertexSet odd;                          // V1: odd BFS depth
    std::vector<std::pair<int, int>> tree;  // BFS tree edges (parent, child)
};

// BFS spanning tree from root with neighbors visited in id order, partitioned
// by depth parity.  Throws InputError if g is disconnected (or root invalid).
TreeLevels spanning_tree_levels(const Graph& g, int root);

// Exact maximum clique / independent set via branch and bound with a greedy
// coloring bound.  Deterministic: returns the lexicographically least optimum.
// Throws CapExceededError when vertex_count > cap.
VertexSet max_clique_exact(const Graph& g, int cap = kDefaultExactCap);
VertexSet max_independent_set_exact(const Graph& g, int cap = kDefaultExactCap);

} // namespace mmvc
