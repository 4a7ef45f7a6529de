#include "mmvc/minimal_cover.hpp"

#include <algorithm>
#include <string>

#include "mmvc/errors.hpp"

namespace mmvc {
namespace {

// v can leave the cover X iff all of its neighbors stay in X (then each of
// its edges is still covered from the other side).
bool removable(const Graph& g, const std::vector<char>& in_x, int v) {
    for (int w : g.neighbors(v))
        if (!in_x[w]) return false;
    return true;
}

// One deletion pass over `order`; single pass suffices because a vertex that
// was not removable only loses double-covered edges as X shrinks.
VertexSet minimalize(const Graph& g, std::vector<char>& in_x, const std::vector<int>& order) {
    for (int v : order)
        if (in_x[v] && removable(g, in_x, v)) in_x[v] = 0;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_x[v]) out.push_back(v);
    return VertexSet::from_sorted(std::move(out));
}

} // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in_x[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!in_x[u] && !in_x[v]) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& x) {
    if (!is_vertex_cover(g, x)) return false;
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x) in_x[v] = 1;
    for (int v : x)
        if (removable(g, in_x, v)) return false;
    return true;
}

VertexSet greedy_minimal_vc(const Graph& g) {
    std::vector<char> in_x(g.vertex_count(), 1);
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    return minimalize(g, in_x, order);
}

VertexSet extend_nbhd_to_minimal_vc(const Graph& g, const VertexSet& s) {
    if (!g.is_independent_set(s)) throw InputError("extension seed set is not independent");
    std::vector<char> in_x(g.vertex_count(), 1);
    for (int v : s) in_x[v] = 0;
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_x[v]) order.push_back(v);
    // Every neighbor of s survives: it covers an edge into s alone.
    return minimalize(g, in_x, order);
}

VertexSet complete_and_minimalize(const Graph& g, const VertexSet& x0) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x0) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("x0 vertex out of range");
        in_x[v] = 1;
    }
    std::vector<int> added;
    for (auto [u, v] : g.edges()) {
        if (!in_x[u] && !in_x[v]) {
            in_x[u] = 1;
            added.push_back(u);
        }
    }
    std::vector<int> order(added.rbegin(), added.rend());
    for (int v : x0)
        if (in_x[v]) order.push_back(v);
    return minimalize(g, in_x, order);
}

namespace {

// Minimum independent dominating set by branching on the least undominated
// vertex v: any solution must contain a vertex of N[v] that is still
// independent of the picks so far, and those candidates coincide with
// N[v] minus the already-covered vertices.  Equal-size solutions are compared
// as sorted sets so the reported optimum is lexicographically least.
class IdsSearch {
public:
    explicit IdsSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        closed_.reserve(n_);
        for (int v = 0; v < n_; ++v) {
            Bitset c = g.row(v);
            c.set(v);
            closed_.push_back(std::move(c));
        }
    }

    std::vector<int> run() {
        recurse(Bitset(n_));
        return best_;
    }

private:
    // covered = N[picks]: dominated vertices, which are exactly the ones no
    // longer eligible to join the independent set.
    void recurse(const Bitset& covered) {
        int v = -1;
        for (int i = 0; i < n_; ++i) {
            if (!covered.test(i)) {
                v = i;
                break;
            }
        }
        if (v == -1) {
            std::vector<int> sorted = current_;
            std::sort(sorted.begin(), sorted.end());
            if (!found_ || sorted.size() < best_.size() ||
                (sorted.size() == best_.size() && sorted < best_)) {
                best_ = std::move(sorted);
                found_ = true;
            }
            return;
        }
        if (found_ && current_.size() + 1 > best_.size()) return;
        auto try_pick = [&](int u) {
            if (covered.test(u)) return;
            current_.push_back(u);
            Bitset next = covered;
            next |= closed_[u];
            recurse(next);
            current_.pop_back();
        };
        try_pick(v);
        for (int u : g_.neighbors(v)) try_pick(u);
    }

    const Graph& g_;
    int n_;
    std::vector<Bitset> closed_;
    std::vector<int> current_;
    std::vector<int> best_;
    bool found_ = false;
};

} // namespace

VertexSet mmvc_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw CapExceededError("exact mmvc oracle capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n));
    IdsSearch search(g);
    std::vector<int> ids = search.run();
    std::vector<char> in_ids(n, 0);
    for (int v : ids) in_ids[v] = 1;
    std::vector<int> cover;
    for (int v = 0; v < n; ++v)
        if (!in_ids[v]) cover.push_back(v);
    return VertexSet::from_sorted(std::move(cover));
}

} // namespace mmvc
