#pragma once

#include <cstdint>
#include <string>

#include "mmvc/graph.hpp"
#include "mmvc/reductions.hpp"

namespace mmvc {

// Deterministic splittable PRNG.  We avoid std::uniform_int_distribution and
// friends because their outputs differ across standard library
// implementations; every draw here is reproducible from the seed alone.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) via rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

    SplitMix64 split() { return SplitMix64(next()); }
};

enum class GraphClass {
    Any,
    Bipartite,
    TriangleFree,
    KtFree,
    PawFree,
    BullFree,
    K1tFree,
};

std::string graph_class_name(GraphClass cls);

struct GenSpec {
    GraphClass cls = GraphClass::Any;
    int t = 3;  // order parameter for KtFree / K1tFree
    int n = 0;
    double edge_density = 0.5;
    uint64_t seed = 0;
};

// Generates a random graph guaranteed to lie in the requested class.
// Deterministic: the same GenSpec always yields the same graph.
Graph generate(const GenSpec& spec);

// Uniform random monotone CNF: each clause is all-positive or all-negative,
// width between 1 and 3, over variables x_0..x_{n-1}.
CnfFormula generate_monotone_cnf(int var_count, int clause_count, uint64_t seed);

// Triangle on u=0, v=1, w=2 with p >= 2 pendant vertices attached to each
// corner: u's pendants are 3..2+p, v's are 3+p..2+2p, w's are 3+2p..2+3p.
// The BFS tree rooted at u puts v, w, and u's pendants at level 1, so the
// even/odd split is 1+2p versus 2+p and level-based seeding of the greedy
// completion lands on a cover of size 2+p.
struct FernauFixture {
    Graph graph;
    int u = 0;
    int v = 1;
    int w = 2;
    int p = 0;
    VertexSet u_pendants;
    VertexSet v_pendants;
    VertexSet w_pendants;
};

FernauFixture fernau_counterexample(int p);

}  // namespace mmvc
