#include "mmvc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mmvc/errors.hpp"

namespace mmvc {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_sorted(std::vector<int> ids) {
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

std::string VertexSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids_[i]);
    }
    return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n), rows_(n, Bitset(n)) {
    if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
    return true;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& vs) const {
    Graph g(vs.size());
    for (int i = 0; i < vs.size(); ++i)
        for (int j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) g.add_edge(i, j);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    Bitset nb(n_);
    for (int v : s) nb |= rows_[v];
    for (int v : s) nb.reset(v);
    return VertexSet::from_sorted(nb.to_vector());
}

bool Graph::is_independent_set(const VertexSet& s) const {
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (adjacent(s[i], s[j])) return false;
    return true;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (!adjacent(s[i], s[j])) return false;
    return true;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj_[v]) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(VertexSet(std::move(members)));
    }
    return out;
}

Graph read_graph(std::istream& in) {
    std::string line;
    long lineno = 0;
    long n = -1, m = -1;
    Graph g;
    long seen_edges = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate 'p' header", lineno);
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("expected 'p <n> <m>' with nonnegative counts", lineno);
            g = Graph(static_cast<int>(n));
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError("edge line before 'p' header", lineno);
            long u, v;
            if (!(ls >> u >> v)) throw ParseError("expected 'e <u> <v>'", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("endpoint out of range [1," + std::to_string(n) + "]", lineno);
            if (u == v) throw ParseError("self-loop not allowed", lineno);
            if (!g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
                throw ParseError("duplicate edge", lineno);
            ++seen_edges;
            continue;
        }
        throw ParseError("unknown line tag '" + tag + "'", lineno);
    }
    if (n < 0) throw ParseError("missing 'p <n> <m>' header", lineno);
    if (seen_edges != m)
        throw ParseError("header declares m=" + std::to_string(m) + " but file has " +
                             std::to_string(seen_edges) + " edge lines",
                         lineno);
    return g;
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_graph(out, g, comment);
}

} // namespace mmvc
