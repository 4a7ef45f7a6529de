#include <algorithm>

#include "doctest.h"
#include "mmvc/errors.hpp"
#include "mmvc/generators.hpp"
#include "mmvc/graph_algos.hpp"
#include "test_util.hpp"

using namespace mmvc;
using namespace testutil;

TEST_CASE("remove_isolated") {
    Graph g(4); // P_3 plus isolated vertex 3
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const auto r = remove_isolated(g);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.new_to_old == std::vector<int>{0, 1, 2});
    CHECK(r.old_to_new[3] == -1);

    CHECK(remove_isolated(Graph(5)).graph.vertex_count() == 0);

    const auto id = remove_isolated(complete_graph(3));
    CHECK(id.graph == complete_graph(3));
    CHECK(id.old_to_new == std::vector<int>{0, 1, 2});
}

TEST_CASE("is_bipartite") {
    const auto c4 = is_bipartite(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK((*c4)[0] == 0); // least vertex of each component gets color 0
    for (auto [u, v] : cycle_graph(4).edges()) CHECK((*c4)[u] != (*c4)[v]);

    CHECK_FALSE(is_bipartite(cycle_graph(5)).has_value());
    CHECK(is_bipartite(Graph()).has_value());
    CHECK(is_bipartite(Graph(3)).has_value());
}

TEST_CASE("greedy_coloring") {
    auto natural = [](int n) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        return order;
    };
    auto color_count = [](const std::vector<int>& colors) {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    };

    CHECK(color_count(greedy_coloring(complete_graph(4), natural(4))) == 4);
    CHECK(color_count(greedy_coloring(Graph(5), natural(5))) == 1);
    CHECK(color_count(greedy_coloring(path_graph(4), natural(4))) == 2);

    CHECK_THROWS_AS(greedy_coloring(path_graph(3), std::vector<int>{0, 0, 1}), InputError);

    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.coin(0.5)) g.add_edge(i, j);
        std::vector<int> order = natural(n);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(static_cast<uint64_t>(i + 1))]);
        const auto colors = greedy_coloring(g, order);
        for (auto [u, v] : g.edges()) CHECK(colors[u] != colors[v]);
        CHECK(color_count(colors) <= g.max_degree() + 1);
    }
}

TEST_CASE("spanning_tree_levels on a star and a path") {
    const auto star = spanning_tree_levels(star_graph(4), 0);
    CHECK(star.even.ids() == std::vector<int>{0});
    CHECK(star.odd.ids() == std::vector<int>{1, 2, 3, 4});

    const auto p3 = spanning_tree_levels(path_graph(3), 0);
    CHECK(p3.even.ids() == std::vector<int>{0, 2});
    CHECK(p3.odd.ids() == std::vector<int>{1});
}

TEST_CASE("spanning_tree_levels on the pendant-triangle fixture") {
    const auto fx = fernau_counterexample(2);
    const auto levels = spanning_tree_levels(fx.graph, fx.u);
    CHECK(levels.even.size() == 5); // 1 + 2p
    CHECK(levels.odd.size() == 4);  // 2 + p
    // the triangle edge {v, w} joins two level-1 vertices, so the tree omits it
    for (auto [a, b] : levels.tree) {
        CHECK_FALSE((a == fx.v && b == fx.w));
        CHECK_FALSE((a == fx.w && b == fx.v));
        // every tree edge crosses the parity split
        CHECK(levels.even.contains(a) != levels.even.contains(b));
    }
    CHECK(static_cast<int>(levels.tree.size()) == fx.graph.vertex_count() - 1);
}

TEST_CASE("spanning_tree_levels rejects bad input") {
    Graph two_parts(4);
    two_parts.add_edge(0, 1);
    two_parts.add_edge(2, 3);
    CHECK_THROWS_AS(spanning_tree_levels(two_parts, 0), InputError);
    CHECK_THROWS_AS(spanning_tree_levels(path_graph(3), 5), InputError);
}

TEST_CASE("exact independent set and clique fixed values") {
    CHECK(max_independent_set_exact(cycle_graph(5)).ids() == std::vector<int>{0, 2});
    CHECK(max_clique_exact(cycle_graph(5)).ids() == std::vector<int>{0, 1});
    CHECK(max_independent_set_exact(complete_graph(4)).size() == 1);
    CHECK(max_clique_exact(complete_graph(4)).size() == 4);
    CHECK(max_independent_set_exact(Graph(6)).size() == 6);
    CHECK(max_clique_exact(Graph(6)).size() == 1);
    CHECK(max_clique_exact(Graph()).size() == 0);
}

TEST_CASE("exact searches respect the cap") {
    CHECK_THROWS_AS(max_independent_set_exact(Graph(29)), CapExceededError);
    CHECK_THROWS_AS(max_clique_exact(Graph(29)), CapExceededError);
    CHECK(max_independent_set_exact(Graph(29), 30).size() == 29);
}

TEST_CASE("exact searches agree with subset enumeration") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(11)); // 1..11
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.coin(0.4)) g.add_edge(i, j);

        const VertexSet is = max_independent_set_exact(g);
        CHECK(g.is_independent_set(is));
        CHECK(is.size() == brute_max_is_size(g));

        const VertexSet cl = max_clique_exact(g);
        CHECK(g.is_clique(cl));
        CHECK(cl.size() == brute_max_clique_size(g));

        // complementarity with minimum vertex cover
        CHECK(g.vertex_count() - is.size() == brute_min_vc_size(g));
    }
}
