#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mmvc/bitset.hpp"

namespace mmvc {

// Sorted duplicate-free set of vertex ids.  Kept as a plain sorted vector so
// set relations and the lexicographic tie-break order fall out of the usual
// vector comparisons.
class VertexSet {
public:
    VertexSet() = default;
    // Sorts and deduplicates.
    explicit VertexSet(std::vector<int> ids);

    static VertexSet from_sorted(std::vector<int> ids); // trusts the caller

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& ids() const { return ids_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted id list: the tie-break order used
    // throughout the library.
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.ids_ <=> b.ids_;
    }

    std::string str() const;

private:
    std::vector<int> ids_;
};

// Simple undirected graph on vertices 0..n-1.  No self-loops, no duplicate
// edges.  Stores both sorted adjacency lists and row bitsets: the lists give
// deterministic iteration order, the rows give O(n/64) set operations for the
// exact searches.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // Returns false if the edge was already present.  Throws InputError on a
    // self-loop or an out-of-range endpoint.
    bool add_edge(int u, int v);

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by vs; vertex i of the result is vs[i].
    Graph induced(const VertexSet& vs) const;
    Graph complement() const;

    // N(S): all neighbors of S, excluding S itself.
    VertexSet neighborhood(const VertexSet& s) const;

    bool is_independent_set(const VertexSet& s) const;
    bool is_clique(const VertexSet& s) const;

    // Connected components, each sorted, ordered by smallest member.
    std::vector<VertexSet> components() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_;
};

// Text format: optional 'c' comment lines, one 'p <n> <m>' header, then m
// lines 'e <u> <v>' with 1-based endpoints.  Parse errors carry line numbers.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = "");

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& comment = "");

} // namespace mmvc
