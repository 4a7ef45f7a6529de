#include <sstream>

#include "doctest.h"
#include "mmvc/errors.hpp"
#include "mmvc/graph.hpp"
#include "test_util.hpp"

using namespace mmvc;
using namespace testutil;

TEST_CASE("vertex set sorts, dedups, and supports set ops") {
    VertexSet s(std::vector<int>{4, 1, 4, 2});
    CHECK(s.ids() == std::vector<int>{1, 2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    s.insert(3);
    s.insert(3);
    CHECK(s.ids() == std::vector<int>{1, 2, 3, 4});
    s.erase(1);
    CHECK(s.ids() == std::vector<int>{2, 3, 4});

    CHECK(VertexSet(std::vector<int>{0, 2}) < VertexSet(std::vector<int>{0, 3}));
    CHECK(VertexSet(std::vector<int>{0, 2}) < VertexSet(std::vector<int>{0, 2, 5}));
}

TEST_CASE("graph edge bookkeeping") {
    Graph g(4);
    CHECK(g.add_edge(2, 0));
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(0, 2)); // duplicate in either orientation
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.max_degree() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});

    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
    CHECK_THROWS_AS(g.add_edge(-1, 0), InputError);
}

TEST_CASE("induced subgraph relabels by position") {
    const Graph g = cycle_graph(5);
    const Graph h = g.induced(VertexSet(std::vector<int>{0, 1, 3}));
    CHECK(h.vertex_count() == 3);
    // only edge among {0,1,3} is (0,1); 3 is adjacent to neither in C_5
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("complement") {
    const Graph g = path_graph(3);
    const Graph h = g.complement();
    CHECK(h.edge_count() == 1);
    CHECK(h.adjacent(0, 2));
    CHECK(complete_graph(4).complement().edge_count() == 0);
}

TEST_CASE("neighborhood excludes the set itself") {
    const Graph g = path_graph(4);
    CHECK(g.neighborhood(VertexSet(std::vector<int>{1})).ids() == std::vector<int>{0, 2});
    CHECK(g.neighborhood(VertexSet(std::vector<int>{1, 2})).ids() == std::vector<int>{0, 3});
    CHECK(g.neighborhood(VertexSet()).empty());
}

TEST_CASE("clique and independent set predicates") {
    const Graph g = complete_graph(4);
    CHECK(g.is_clique(VertexSet(std::vector<int>{0, 1, 3})));
    CHECK_FALSE(g.is_independent_set(VertexSet(std::vector<int>{0, 1})));
    CHECK(g.is_independent_set(VertexSet(std::vector<int>{2})));
    CHECK(g.is_independent_set(VertexSet()));
    CHECK(g.is_clique(VertexSet()));
}

TEST_CASE("components ordered by least member") {
    Graph g(6);
    g.add_edge(4, 5);
    g.add_edge(1, 2);
    const auto comps = g.components();
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].ids() == std::vector<int>{0});
    CHECK(comps[1].ids() == std::vector<int>{1, 2});
    CHECK(comps[2].ids() == std::vector<int>{3});
    CHECK(comps[3].ids() == std::vector<int>{4, 5});
}

TEST_CASE("graph text format round-trips") {
    const Graph g = cycle_graph(5);
    std::ostringstream out;
    write_graph(out, g, "five cycle");
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);
}

TEST_CASE("graph parser accepts comments and 1-based endpoints") {
    std::istringstream in("c a path\np 3 2\ne 1 2\ne 2 3\n");
    const Graph g = read_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("graph parser reports line numbers") {
    auto expect_parse_error = [](const std::string& text, long line) {
        std::istringstream in(text);
        try {
            read_graph(in);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_parse_error("p x y\n", 1);
    expect_parse_error("p 2 1\ne 1 3\n", 2);             // endpoint out of range
    expect_parse_error("p 2 2\ne 1 2\ne 2 1\n", 3);      // duplicate edge
    expect_parse_error("p 2 1\ne 1 1\n", 2);             // self-loop
    expect_parse_error("e 1 2\n", 1);                    // edge before header
    expect_parse_error("p 2 2\ne 1 2\n", 2);             // edge count mismatch
    expect_parse_error("p 2 0\nq\n", 2);                 // unknown tag
    expect_parse_error("", 0);                           // missing header
}
