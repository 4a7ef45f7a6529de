#include "mmvc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "mmvc/errors.hpp"
#include "mmvc/patterns.hpp"

namespace mmvc {
namespace {

constexpr int kRepairCap = 40;

void check_spec(const GenSpec& spec) {
    if (spec.n < 0) throw GenerationError("vertex count must be nonnegative");
    if (!(spec.edge_density >= 0.0 && spec.edge_density <= 1.0))
        throw GenerationError("edge density must lie in [0, 1]");
    switch (spec.cls) {
    case GraphClass::KtFree:
        if (spec.t < 2 || spec.t > 8)
            throw GenerationError("KtFree requires t in [2, 8]");
        break;
    case GraphClass::K1tFree:
        if (spec.t < 2 || spec.t > 7)
            throw GenerationError("K1tFree requires t in [2, 7]");
        break;
    default:
        break;
    }
    if ((spec.cls == GraphClass::BullFree || spec.cls == GraphClass::K1tFree) &&
        spec.n > kRepairCap)
        throw GenerationError("repair-based generation is capped at " +
                              std::to_string(kRepairCap) + " vertices");
}

Graph erdos_renyi(int n, double density, SplitMix64& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(density)) g.add_edge(i, j);
    return g;
}

Graph random_bipartite(int n, double density, SplitMix64& rng) {
    std::vector<int> side(n);
    for (int i = 0; i < n; ++i) side[i] = rng.coin(0.5) ? 1 : 0;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[i] != side[j] && rng.coin(density)) g.add_edge(i, j);
    return g;
}

// Scans pairs in lexicographic order and adds an edge only when the two
// endpoints have no common neighbor yet, so no triangle can ever close.
void add_triangle_free_edges(Graph& g, const std::vector<int>& verts, double density,
                             SplitMix64& rng) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const int i = verts[a];
            const int j = verts[b];
            if (!g.row(i).intersects(g.row(j)) && rng.coin(density)) g.add_edge(i, j);
        }
}

Graph random_triangle_free(int n, double density, SplitMix64& rng) {
    Graph g(n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    add_triangle_free_edges(g, all, density, rng);
    return g;
}

// A (t-1)-partite graph contains no K_t: any t vertices repeat a part, and
// parts are independent.
Graph random_multipartite(int n, int parts, double density, SplitMix64& rng) {
    std::vector<int> part(n);
    for (int i = 0; i < n; ++i)
        part[i] = parts > 0 ? static_cast<int>(rng.below(static_cast<uint64_t>(parts))) : 0;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part[i] != part[j] && rng.coin(density)) g.add_edge(i, j);
    return g;
}

// A graph is paw-free exactly when every component is triangle-free or
// complete multipartite, so we build a disjoint union of such components.
Graph random_paw_free(int n, double density, SplitMix64& rng) {
    const int groups = n == 0 ? 0 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n / 5 + 1)));
    std::vector<int> group(n);
    for (int i = 0; i < n; ++i)
        group[i] = static_cast<int>(rng.below(static_cast<uint64_t>(groups)));

    Graph g(n);
    for (int c = 0; c < groups; ++c) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (group[i] == c) verts.push_back(i);
        if (verts.size() < 2) continue;
        if (rng.coin(0.5)) {
            add_triangle_free_edges(g, verts, density, rng);
        } else {
            const int parts = 2 + static_cast<int>(rng.below(3));
            std::vector<int> part(verts.size());
            for (auto& x : part) x = static_cast<int>(rng.below(static_cast<uint64_t>(parts)));
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    if (part[a] != part[b]) g.add_edge(verts[a], verts[b]);
        }
    }
    return g;
}

// Starts from a random graph and deletes, while any induced copy of the
// pattern remains, the least edge inside the found copy.  Each round removes
// one edge, so the loop ends after at most m rounds; the edgeless graph
// trivially has no copy of any pattern with an edge.
Graph repair_to_pattern_free(int n, double density, const PatternId& pattern,
                             SplitMix64& rng) {
    Graph g = erdos_renyi(n, density, rng);
    for (;;) {
        const auto copy = find_induced(g, pattern);
        if (!copy) return g;
        int eu = -1;
        int ev = -1;
        const auto& ids = copy->ids();
        for (std::size_t a = 0; a < ids.size() && eu < 0; ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (g.adjacent(ids[a], ids[b])) {
                    eu = ids[a];
                    ev = ids[b];
                    break;
                }
        auto edges = g.edges();
        std::erase(edges, std::pair(eu, ev));
        g = Graph::from_edges(g.vertex_count(), edges);
    }
}

}  // namespace

std::string graph_class_name(GraphClass cls) {
    switch (cls) {
    case GraphClass::Any: return "any";
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::TriangleFree: return "triangle-free";
    case GraphClass::KtFree: return "kt-free";
    case GraphClass::PawFree: return "paw-free";
    case GraphClass::BullFree: return "bull-free";
    case GraphClass::K1tFree: return "k1t-free";
    }
    return "unknown";
}

Graph generate(const GenSpec& spec) {
    check_spec(spec);
    SplitMix64 rng(spec.seed);
    switch (spec.cls) {
    case GraphClass::Any:
        return erdos_renyi(spec.n, spec.edge_density, rng);
    case GraphClass::Bipartite:
        return random_bipartite(spec.n, spec.edge_density, rng);
    case GraphClass::TriangleFree:
        return random_triangle_free(spec.n, spec.edge_density, rng);
    case GraphClass::KtFree:
        return random_multipartite(spec.n, spec.t - 1, spec.edge_density, rng);
    case GraphClass::PawFree:
        return random_paw_free(spec.n, spec.edge_density, rng);
    case GraphClass::BullFree:
        return repair_to_pattern_free(spec.n, spec.edge_density, PatternId::bull(), rng);
    case GraphClass::K1tFree:
        return repair_to_pattern_free(spec.n, spec.edge_density, PatternId::star(spec.t), rng);
    }
    throw GenerationError("unknown graph class");
}

CnfFormula generate_monotone_cnf(int var_count, int clause_count, uint64_t seed) {
    if (var_count < 0 || clause_count < 0)
        throw GenerationError("variable and clause counts must be nonnegative");
    if (var_count == 0 && clause_count > 0)
        throw GenerationError("cannot generate clauses without variables");

    SplitMix64 rng(seed);
    CnfFormula f;
    f.var_count = var_count;
    for (int j = 0; j < clause_count; ++j) {
        const bool positive = rng.coin(0.5);
        const int max_width = std::min(3, var_count);
        const int width = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_width)));
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < width) {
            const int v = static_cast<int>(rng.below(static_cast<uint64_t>(var_count)));
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::sort(vars.begin(), vars.end());
        std::vector<Literal> clause;
        for (int v : vars) clause.push_back({v, positive});
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

FernauFixture fernau_counterexample(int p) {
    if (p < 2) throw GenerationError("fixture requires p >= 2 pendants per corner");
    FernauFixture fx;
    fx.p = p;
    Graph g(3 + 3 * p);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::vector<int> pend_u, pend_v, pend_w;
    for (int i = 0; i < p; ++i) {
        pend_u.push_back(3 + i);
        pend_v.push_back(3 + p + i);
        pend_w.push_back(3 + 2 * p + i);
        g.add_edge(0, 3 + i);
        g.add_edge(1, 3 + p + i);
        g.add_edge(2, 3 + 2 * p + i);
    }
    fx.graph = std::move(g);
    fx.u_pendants = VertexSet::from_sorted(std::move(pend_u));
    fx.v_pendants = VertexSet::from_sorted(std::move(pend_v));
    fx.w_pendants = VertexSet::from_sorted(std::move(pend_w));
    return fx;
}

}  // namespace mmvc
