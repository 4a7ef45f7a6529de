#pragma once

#include <optional>
#include <string>

#include "mmvc/graph.hpp"

namespace mmvc {

// Small forbidden patterns, all on at most 8 vertices.
enum class PatternKind {
    Complete, // K_t, t in [2,8]
    Star,     // K_{1,t}, t in [1,7]
    Path,     // P_t, t in [1,8]
    Bull,     // triangle with pendants on two of its vertices
    TBull,    // K_t with pendants on two of its vertices, t in [3,6]
    Paw,      // triangle with one pendant
    Diamond,  // K_4 minus an edge
    Cycle,    // C_t, t in [3,8]
};

struct PatternId {
    PatternKind kind;
    int t = 0; // parameter for Complete/Star/Path/TBull/Cycle

    static PatternId complete(int t) { return {PatternKind::Complete, t}; }
    static PatternId star(int t) { return {PatternKind::Star, t}; }
    static PatternId path(int t) { return {PatternKind::Path, t}; }
    static PatternId bull() { return {PatternKind::Bull, 3}; }
    static PatternId tbull(int t) { return {PatternKind::TBull, t}; }
    static PatternId paw() { return {PatternKind::Paw, 0}; }
    static PatternId diamond() { return {PatternKind::Diamond, 0}; }
    static PatternId cycle(int t) { return {PatternKind::Cycle, t}; }

    std::string name() const;
    friend bool operator==(const PatternId&, const PatternId&) = default;
};

// Concrete graph for the pattern.  Vertex layouts are fixed:
//   Complete: any;  Star: center 0;  Path: 0-1-...-(t-1);
//   Bull/TBull: clique 0..t-1, pendant t on 0, pendant t+1 on 1;
//   Paw: triangle 0,1,2, pendant 3 on 0;  Diamond: K_4 minus edge {2,3};
//   Cycle: 0-1-...-(t-1)-0.
// Throws InputError for parameters outside the supported ranges.
Graph pattern_graph(const PatternId& id);

// Lexicographically least vertex set of g inducing a copy of the pattern, or
// nullopt if the graph is pattern-free.  Subset backtracking in increasing id
// order, pruned by the degree sequences realizable inside the pattern, with
// an exact isomorphism check on full-size candidates.
std::optional<VertexSet> find_induced(const Graph& g, const PatternId& id);

// Exact isomorphism between two graphs on at most 8 vertices each.
bool small_graphs_isomorphic(const Graph& a, const Graph& b);

} // namespace mmvc
