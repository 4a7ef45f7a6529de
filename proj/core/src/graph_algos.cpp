#include "mmvc/graph_algos.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mmvc/errors.hpp"

namespace mmvc {

RelabeledGraph remove_isolated(const Graph& g) {
    const int n = g.vertex_count();
    RelabeledGraph out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 0) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (auto [u, v] : g.edges()) out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
    return out;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InputError("coloring order must be a permutation of the vertices");
    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (int v : order) {
        if (v < 0 || v >= n || color[v] != -1)
            throw InputError("coloring order must be a permutation of the vertices");
        used.assign(n + 1, 0);
        for (int w : g.neighbors(v))
            if (color[w] >= 0) used[color[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

TreeLevels spanning_tree_levels(const Graph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw InputError("root out of range");
    std::vector<int> depth(n, -1);
    TreeLevels out;
    std::deque<int> queue;
    depth[root] = 0;
    queue.push_back(root);
    std::vector<int> even = {root}, odd;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (depth[w] != -1) continue;
            depth[w] = depth[v] + 1;
            out.tree.emplace_back(v, w);
            (depth[w] % 2 == 0 ? even : odd).push_back(w);
            queue.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
        if (depth[v] == -1) throw InputError("graph is not connected; no spanning tree");
    out.even = VertexSet(std::move(even));
    out.odd = VertexSet(std::move(odd));
    return out;
}

namespace {

// Classic max-clique branch and bound.  Candidates are greedily colored in id
// order; a branch is cut when |R| plus the candidate's color bound cannot
// beat `best`.  Everything runs on adjacency-row bitsets.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    // Size of a maximum clique inside candidate set P, given r vertices
    // already fixed; `best` is used as the initial pruning floor.
    int max_size(Bitset candidates, int fixed, int best) {
        best_ = best;
        expand(candidates, fixed);
        return best_;
    }

private:
    void expand(const Bitset& candidates, int fixed) {
        if (candidates.none()) {
            best_ = std::max(best_, fixed);
            return;
        }
        // Greedy coloring of the candidates; color numbers are 1-based upper
        // bounds on the clique size inside the uncolored remainder.
        std::vector<int> verts, bound;
        Bitset uncolored = candidates;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset eligible = uncolored;
            while (true) {
                const int v = eligible.find_first();
                if (v < 0) break;
                eligible.reset(v);
                uncolored.reset(v);
                eligible.and_not(g_.row(v));
                verts.push_back(v);
                bound.push_back(color);
            }
        }
        Bitset p = candidates;
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (fixed + bound[i] <= best_) return;
            const int v = verts[i];
            expand(p & g_.row(v), fixed + 1);
            p.reset(v);
        }
    }

    const Graph& g_;
    int n_;
    int best_ = 0;
};

} // namespace

VertexSet max_clique_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw CapExceededError("exact clique search capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n));
    if (n == 0) return VertexSet();

    Bitset all(n);
    all.set_all();
    CliqueSearch search(g);
    const int opt = search.max_size(all, 0, 0);

    // Fix vertices in id order whenever the optimum stays reachable inside
    // the shrinking candidate set; this pins down the lexicographically least
    // maximum clique with at most n further searches.
    std::vector<int> clique;
    Bitset p = all;
    while (static_cast<int>(clique.size()) < opt) {
        const int fixed = static_cast<int>(clique.size());
        for (int v = p.find_first(); v >= 0; v = p.find_next(v)) {
            Bitset rest = p & g.row(v);
            CliqueSearch check(g);
            if (fixed + 1 + check.max_size(rest, 0, 0) >= opt) {
                clique.push_back(v);
                p = rest;
                break;
            }
            p.reset(v);
        }
    }
    return VertexSet(std::move(clique));
}

VertexSet max_independent_set_exact(const Graph& g, int cap) {
    // An independent set is a clique of the complement; ids are preserved, so
    // the lexicographic tie-break carries over.
    const int n = g.vertex_count();
    if (n > cap)
        throw CapExceededError("exact independent-set search capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n));
    return max_clique_exact(g.complement(), cap);
}

} // namespace mmvc
