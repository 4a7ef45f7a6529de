#pragma once

#include "mmvc/graph.hpp"

namespace mmvc {

// Default cap for the exact maximum-minimal-vertex-cover oracle.
inline constexpr int kDefaultOracleCap = 20;

// A vertex cover X is *minimal* iff no proper subset covers, equivalently iff
// every v in X has a neighbor outside X.  Complements of minimal covers are
// exactly the independent dominating sets, which is what the exact oracle
// enumerates.

bool is_vertex_cover(const Graph& g, const VertexSet& x);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& x);

// Start from all vertices and delete in ascending id order whenever the rest
// still covers.  Output is a minimal vertex cover (possibly far from maximum).
VertexSet greedy_minimal_vc(const Graph& g);

// Given an independent set s, minimalizes V \ s into a minimal vertex cover.
// The result always contains all of N(s), so its size is at least |N(s)|.
// Throws InputError if s is not independent.
VertexSet extend_nbhd_to_minimal_vc(const Graph& g, const VertexSet& s);

// Exact maximum minimal vertex cover via branching over independent
// dominating sets; returns the witness cover (complement of the
// lexicographically least minimum independent dominating set).
// Throws CapExceededError when vertex_count > cap.
VertexSet mmvc_exact(const Graph& g, int cap = kDefaultOracleCap);

// Repairs x0 into a vertex cover by adding the smaller endpoint of each
// uncovered edge (edges scanned in sorted order), then minimalizes, deleting
// the augmented vertices first (most recent first) and the surviving x0
// vertices in ascending id order afterwards.
VertexSet complete_and_minimalize(const Graph& g, const VertexSet& x0);

} // namespace mmvc
