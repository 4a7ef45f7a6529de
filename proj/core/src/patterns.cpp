#include "mmvc/patterns.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "mmvc/errors.hpp"

namespace mmvc {
namespace {

// Sorted degree sequence packed into a u32 (degrees < 8, at most 8 of them).
std::uint32_t pack_degseq(std::array<int, 8>& deg, int q) {
    std::sort(deg.begin(), deg.begin() + q);
    std::uint32_t key = 0;
    for (int i = 0; i < q; ++i) key = (key << 3) | static_cast<std::uint32_t>(deg[i]);
    return key;
}

std::uint32_t degseq_of(const Graph& g, const std::vector<int>& vs) {
    const int q = static_cast<int>(vs.size());
    std::array<int, 8> deg{};
    for (int i = 0; i < q; ++i) {
        int d = 0;
        for (int j = 0; j < q; ++j)
            if (j != i && g.adjacent(vs[i], vs[j])) ++d;
        deg[i] = d;
    }
    return pack_degseq(deg, q);
}

// For each size q, the set of degree sequences the pattern can induce on q of
// its vertices.  Partial candidate sets whose degree sequence is not in the
// table can never extend to an induced copy.
struct PatternTables {
    Graph pattern;
    std::vector<std::vector<std::uint32_t>> degseqs; // index q
};

PatternTables build_tables(const Graph& p) {
    const int n = p.vertex_count();
    PatternTables t{p, std::vector<std::vector<std::uint32_t>>(n + 1)};
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        const int q = static_cast<int>(subset.size());
        if (q > 0) t.degseqs[q].push_back(degseq_of(p, subset));
        if (q == n) return;
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& seqs : t.degseqs) {
        std::sort(seqs.begin(), seqs.end());
        seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    }
    return t;
}

bool degseq_allowed(const PatternTables& t, std::uint32_t key, int q) {
    const auto& seqs = t.degseqs[q];
    return std::binary_search(seqs.begin(), seqs.end(), key);
}

// Backtracking isomorphism for graphs on <= 8 vertices: map vertices of a in
// id order onto unused vertices of b with matching degree and adjacency.
bool iso_rec(const Graph& a, const Graph& b, std::vector<int>& map, int next,
             const std::vector<int>& deg_a, const std::vector<int>& deg_b) {
    const int n = a.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (std::find(map.begin(), map.begin() + next, cand) != map.begin() + next) continue;
        if (deg_a[next] != deg_b[cand]) continue;
        bool ok = true;
        for (int i = 0; i < next; ++i) {
            if (a.adjacent(next, i) != b.adjacent(cand, map[i])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        if (iso_rec(a, b, map, next + 1, deg_a, deg_b)) return true;
    }
    return false;
}

} // namespace

std::string PatternId::name() const {
    switch (kind) {
        case PatternKind::Complete: return "K_" + std::to_string(t);
        case PatternKind::Star: return "K_{1," + std::to_string(t) + "}";
        case PatternKind::Path: return "P_" + std::to_string(t);
        case PatternKind::Bull: return "bull";
        case PatternKind::TBull: return std::to_string(t) + "-bull";
        case PatternKind::Paw: return "paw";
        case PatternKind::Diamond: return "diamond";
        case PatternKind::Cycle: return "C_" + std::to_string(t);
    }
    return "?";
}

Graph pattern_graph(const PatternId& id) {
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw InputError("unsupported pattern parameter for " + what);
    };
    switch (id.kind) {
        case PatternKind::Complete: {
            require(id.t >= 2 && id.t <= 8, "K_t");
            Graph g(id.t);
            for (int u = 0; u < id.t; ++u)
                for (int v = u + 1; v < id.t; ++v) g.add_edge(u, v);
            return g;
        }
        case PatternKind::Star: {
            require(id.t >= 1 && id.t <= 7, "K_{1,t}");
            Graph g(id.t + 1);
            for (int v = 1; v <= id.t; ++v) g.add_edge(0, v);
            return g;
        }
        case PatternKind::Path: {
            require(id.t >= 1 && id.t <= 8, "P_t");
            Graph g(id.t);
            for (int v = 0; v + 1 < id.t; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case PatternKind::Bull:
            return pattern_graph(PatternId::tbull(3));
        case PatternKind::TBull: {
            require(id.t >= 3 && id.t <= 6, "t-bull");
            Graph g(id.t + 2);
            for (int u = 0; u < id.t; ++u)
                for (int v = u + 1; v < id.t; ++v) g.add_edge(u, v);
            g.add_edge(0, id.t);
            g.add_edge(1, id.t + 1);
            return g;
        }
        case PatternKind::Paw: {
            Graph g(4);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            g.add_edge(0, 3);
            return g;
        }
        case PatternKind::Diamond: {
            Graph g(4);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            g.add_edge(1, 2);
            g.add_edge(1, 3);
            return g;
        }
        case PatternKind::Cycle: {
            require(id.t >= 3 && id.t <= 8, "C_t");
            Graph g(id.t);
            for (int v = 0; v < id.t; ++v) g.add_edge(v, (v + 1) % id.t);
            return g;
        }
    }
    throw InputError("unknown pattern kind");
}

bool small_graphs_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) {
        deg_a[v] = a.degree(v);
        deg_b[v] = b.degree(v);
    }
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(n, -1);
    return iso_rec(a, b, map, 0, deg_a, deg_b);
}

std::optional<VertexSet> find_induced(const Graph& g, const PatternId& id) {
    const PatternTables tables = build_tables(pattern_graph(id));
    const int p = tables.pattern.vertex_count();
    const int n = g.vertex_count();
    if (p > n) return std::nullopt;

    std::vector<int> chosen;
    chosen.reserve(p);
    std::vector<int> result;

    // Enumerate subsets in increasing-id order, so the first full match is
    // the lexicographically least one.
    auto rec = [&](auto&& self, int next) -> bool {
        const int q = static_cast<int>(chosen.size());
        if (q == p) {
            if (small_graphs_isomorphic(g.induced(VertexSet(chosen)), tables.pattern)) {
                result = chosen;
                return true;
            }
            return false;
        }
        // Not enough vertices left to complete the subset.
        for (int v = next; v <= n - (p - q); ++v) {
            chosen.push_back(v);
            if (degseq_allowed(tables, degseq_of(g, chosen), q + 1)) {
                if (self(self, v + 1)) return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return VertexSet(result);
    return std::nullopt;
}

} // namespace mmvc
