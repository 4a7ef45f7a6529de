#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmvc/eh.hpp"
#include "mmvc/graph.hpp"
#include "mmvc/patterns.hpp"
#include "mmvc/rational.hpp"

namespace mmvc {

// Parameterized question "is there a minimal vertex cover of size >= k?".
struct MmvcInstance {
    Graph graph;
    long long k = 1;
};

// Result of a kernelization pass.
//  - DecidedYes carries a witness solution on the *input* instance (for the
//    cover kernels: a verified minimal vertex cover of size >= k).
//  - DecidedNo means no solution of the required quality exists.
//  - Reduced carries an equivalent smaller instance plus the size bound the
//    reducer guarantees for it; reduced_to_original maps its vertex ids back.
struct KernelOutcome {
    enum class Kind { DecidedYes, DecidedNo, Reduced };

    Kind kind;
    std::optional<VertexSet> witness;
    std::optional<MmvcInstance> reduced;
    long long declared_bound = 0;
    std::vector<int> reduced_to_original;
    VertexSet forced; // vertices forced into every solution (min-VC kernel)
    std::vector<std::string> fired_rules;

    static KernelOutcome yes(VertexSet w, std::vector<std::string> rules);
    static KernelOutcome no(std::vector<std::string> rules);
};

// Hereditary graph classes with provable kernel size bounds, together with
// the exact constants of those bounds.
struct ClassBound {
    enum class Family { General, Kt, Bull, TBull, Paw, K1t };

    Family family;
    int t = 0;

    static ClassBound general() { return {Family::General, 0}; }
    static ClassBound kt(int t) { return {Family::Kt, t}; }
    static ClassBound bull() { return {Family::Bull, 3}; }
    static ClassBound tbull(int t) { return {Family::TBull, t}; }
    static ClassBound paw() { return {Family::Paw, 0}; }
    static ClassBound k1t(int t) { return {Family::K1t, t}; }

    // Homogeneous-set exponent delta for the Erdos-Hajnal families:
    // Kt: 1/(t-1); Bull: 1/4; TBull: 1/4 for t=3 else 4/(t+17); Paw: 1/3.
    Rational delta() const;

    // Guaranteed vertex bound for a reduced instance at parameter k:
    //   General:  k^2 - 1
    //   Kt:       ceil(c_t (k-1)^((2t-3)/(t-1))) + k-1,  c_t = (t-1)/(2^((t-2)/(t-1)) - 1)
    //   Bull:     ceil(c (k-1)^(7/4)) + k-1,             c = 2/(2^(3/4) - 1)
    //   TBull:    ceil(c_t (k-1)^(2-delta_t)) + k-1,     c_t = (t-1)/(2^(1-delta_t) - 1)
    //   Paw:      ceil(c (k-1)^(5/3)) + k-1,             c = 2/(2^(2/3) - 1)
    //   K1t:      t (k-1)
    // Constants are evaluated in long double; the ceiled term is irrational
    // for k >= 2, so the half-ulp rounding slack cannot move the ceiling.
    long long bound(long long k) const;

    std::string formula() const;
    std::string name() const;

    // Forbidden pattern defining the class, when expressible (<= 8 vertices).
    std::optional<PatternId> forbidden_pattern() const;

    // The extractor the kernel uses by default for this class.
    Extractor default_extractor() const;
};

// Kernelization for "mmvc >= k?" on arbitrary graphs: drop isolated
// vertices, answer yes on a vertex of degree >= k (its neighborhood extends
// into a large minimal cover) or on a large greedy minimal cover, and
// otherwise return the isolate-free residual, which has at most k^2 - 1
// vertices.
KernelOutcome kernel_general(const MmvcInstance& inst);

// Kernelization on an H-free class: the general rules, then an
// Erdos-Hajnal partition of the greedy cover; any independent part with k or
// more outside neighbors also answers yes.  The residual then respects the
// class's subquadratic bound.  Class membership is verified via find_induced
// when verify_class is set (and the pattern is expressible); violations throw
// NotInClassError.  A residual above the declared bound throws
// BoundViolationError.
KernelOutcome kernel_hfree(const MmvcInstance& inst, const ClassBound& cls,
                           const Extractor& extractor, bool verify_class = true);
KernelOutcome kernel_hfree(const MmvcInstance& inst, const ClassBound& cls,
                           bool verify_class = true);

// Star-free specialization: the general rules already imply the linear bound
// t(k-1) on K_{1,t}-free graphs, no partition needed.
KernelOutcome kernel_k1t(const MmvcInstance& inst, int t, bool verify_class = true);

// Properly colored graphs: each color class is independent, so a class with
// k or more outside neighbors answers yes; otherwise at most c(k-1) vertices
// remain.  Throws InputError on an improper coloring.
KernelOutcome kernel_colored(const MmvcInstance& inst, const std::vector<int>& coloring);

// Large-optimum-preserving kernel for Maximum Independent Set on K_t-free
// graphs: n >= k^(t-1) is already a yes-instance (witnessed by the Ramsey
// extraction), otherwise the instance itself is a kernel of size < k^(t-1).
KernelOutcome mis_ktfree_lop_kernel(const Graph& g, long long k, int t, bool verify_class = true);

struct DiagnosticViolation {
    std::string what;
    VertexSet vertices;
};

// Structural audit of the neighborhood of a clique, mirroring the arguments
// behind the bull/t-bull/paw bounds.
//
// For bull/t-bull classes: S is the complement of the greedy minimal cover
// (an independent set).  S_C^1 collects, in id order, the members x of
// N(C) intersected with S for which |N_C(x) u N_C(y)| <= |C| - (t-2) holds
// against every prior member y and against x itself; S_C^2 is the rest of
// N(C) n S.  On a t-bull-free graph the C-neighborhoods of S_C^1 form an
// inclusion chain, so they share a common vertex, and t-2 clique vertices
// outside all of them cover S_C^2.  Additionally, every nonadjacent pair
// x, y in N(C) with small neighborhood union is checked for the chain
// property directly; a violating pair exhibits an induced t-bull, which is
// located and reported.
//
// For the paw class: every v in N(C) must see all but at most one vertex of
// C (when |C| >= 2); a violation exhibits an induced paw.
struct CliqueDiagnostic {
    VertexSet clique;
    VertexSet s1, s2;
    bool chain_ok = true;
    std::optional<int> common_neighbor;  // common C-neighbor of S_C^1
    VertexSet covering_vertices;         // the t-2 clique vertices covering S_C^2
    std::vector<DiagnosticViolation> violations;
    std::optional<VertexSet> located_pattern;
};

CliqueDiagnostic clique_neighborhood_diagnostic(const Graph& g, const VertexSet& clique,
                                                const ClassBound& cls);

} // namespace mmvc
