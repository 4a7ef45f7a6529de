#pragma once

#include <vector>

#include "mmvc/graph.hpp"
#include "mmvc/graph_algos.hpp"
#include "mmvc/rational.hpp"

namespace mmvc {

struct HomogeneousSet {
    enum class Kind { Clique, IndependentSet };
    Kind kind;
    VertexSet vertices;
};

// Extraction strategy for one clique-or-independent-set step.  `delta` is the
// guaranteed exponent: each call on an m-vertex in-class graph returns a
// homogeneous set of size >= max(1, floor(m^delta)).
struct Extractor {
    enum class Strategy { RamseyKtFree, PawOlariu, BruteOptimal };

    Strategy strategy;
    int t = 0;      // RamseyKtFree: forbidden clique size
    Rational delta; // guaranteed exponent

    static Extractor ramsey(int t) { return {Strategy::RamseyKtFree, t, Rational(1, t - 1)}; }
    static Extractor olariu() { return {Strategy::PawOlariu, 0, Rational(1, 3)}; }
    static Extractor brute(Rational delta) { return {Strategy::BruteOptimal, 0, delta}; }
};

// Independent set of size >= max(1, floor(n^(1/(t-1)))) in a K_t-free graph.
// Sparse graphs (max degree below n^((t-2)/(t-1))) are handled by greedily
// taking the least vertex and deleting its closed neighborhood; otherwise the
// search recurses into the neighborhood of a maximum-degree vertex, which is
// K_{t-1}-free.  Verifies K_t-freeness up front when validate is set (t <= 8)
// and throws NotInClassError with the found clique on failure.
VertexSet ramsey_is_extract(const Graph& g, int t, bool validate = true);

// Clique or independent set of size >= max(1, floor(n^(1/3))) in a paw-free
// graph, driven by the structure of paw-free graphs (Olariu): every connected
// component is triangle-free or complete multipartite.  Components themselves
// form an independent system, a triangle-free component yields to the t=3
// Ramsey extraction, and a complete multipartite component contains a clique
// (one vertex per part) and an independent set (its largest part) whose sizes
// multiply to at least the component size.  Structure violations throw
// NotInClassError with a located paw.
HomogeneousSet paw_olariu_extract(const Graph& g);

// Larger of an exact maximum clique and maximum independent set.  Throws
// BoundViolationError if both fall below floor(n^delta) (impossible for a
// graph that genuinely satisfies the class's Erdos-Hajnal guarantee), and
// CapExceededError past the exact-search cap.
HomogeneousSet brute_optimal_extract(const Graph& g, Rational delta, int cap = kDefaultExactCap);

struct EhPartition {
    std::vector<HomogeneousSet> cliques;    // in extraction order
    std::vector<HomogeneousSet> indep_sets; // in extraction order
    Rational delta;

    int part_count() const {
        return static_cast<int>(cliques.size() + indep_sets.size());
    }
};

// Repeatedly extracts a homogeneous set and removes it until the graph is
// exhausted.  On an n-vertex in-class input the number of parts is at most
// ceil(n^(1-delta) / (2^(1-delta) - 1)); that bound is checked and a failure
// throws BoundViolationError.  Singleton parts are classified as independent
// sets.
EhPartition eh_partition(const Graph& g, const Extractor& extractor);

// The part-count bound above, evaluated for given n and delta.
long long eh_part_bound(long long n, Rational delta);

} // namespace mmvc
