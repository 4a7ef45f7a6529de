#include <sstream>

#include "doctest.h"
#include "mmvc/errors.hpp"
#include "mmvc/generators.hpp"
#include "mmvc/graph_algos.hpp"
#include "mmvc/minimal_cover.hpp"
#include "mmvc/reductions.hpp"
#include "test_util.hpp"

using namespace mmvc;
using namespace testutil;

namespace {

CnfFormula make_formula(int vars, std::vector<std::vector<Literal>> clauses) {
    CnfFormula f;
    f.var_count = vars;
    f.clauses = std::move(clauses);
    return f;
}

// All minimal vertex covers of g with at least `lower` vertices.
std::vector<VertexSet> minimal_covers_at_least(const Graph& g, long long lower) {
    std::vector<VertexSet> found;
    const int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const VertexSet s = subset_from_mask(mask, n);
        if (static_cast<long long>(s.size()) >= lower && is_minimal_cover_by_definition(g, s))
            found.push_back(s);
    }
    return found;
}

} // namespace

TEST_CASE("brute-force satisfiability oracle") {
    const auto contradiction =
        make_formula(1, {{{0, true}}, {{0, false}}});
    CHECK_FALSE(sat_bruteforce(contradiction).has_value());

    const auto empty_clause = make_formula(2, {{}});
    CHECK_FALSE(sat_bruteforce(empty_clause).has_value());

    // first satisfying assignment in x_0-major order is (false, true)
    const auto xor_ish = make_formula(
        2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}});
    const auto a = sat_bruteforce(xor_ish);
    REQUIRE(a.has_value());
    CHECK(a->values == std::vector<bool>{false, true});

    const auto trivial = make_formula(0, {});
    CHECK(sat_bruteforce(trivial).has_value());

    const auto tautology = make_formula(1, {{{0, true}, {0, false}}});
    CHECK(sat_bruteforce(tautology).has_value());

    CHECK_THROWS_AS(sat_bruteforce(make_formula(1, {{{3, true}}})), InputError);
    CHECK_THROWS_AS(sat_bruteforce(make_formula(25, {})), CapExceededError);
}

TEST_CASE("monotone split doubles variables and preserves satisfiability") {
    const auto unit = make_formula(1, {{{0, true}}});
    const auto split = sat_to_monotone(unit);
    CHECK(split.formula.var_count == 2);
    REQUIRE(split.formula.clauses.size() == 3);
    CHECK(split.formula.is_monotone());
    CHECK(split.var_map == std::vector<std::pair<int, int>>{{0, 1}});
    // image clause, then the exactly-one pair: at-least-one / at-most-one
    CHECK(split.formula.clauses[1].size() == 2);
    CHECK(split.formula.clauses[2][0].positive == false);

    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        CnfFormula f;
        f.var_count = 4;
        const int m = 1 + static_cast<int>(rng.below(5));
        for (int j = 0; j < m; ++j) {
            std::vector<Literal> clause;
            const int width = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < width; ++i)
                clause.push_back({static_cast<int>(rng.below(4)), rng.coin(0.5)});
            f.clauses.push_back(std::move(clause));
        }
        const auto mono = sat_to_monotone(f);
        CHECK(mono.formula.is_monotone());
        CHECK(sat_bruteforce(f).has_value() == sat_bruteforce(mono.formula).has_value());
        // a satisfying split assignment forces y_{2i+1} = !y_{2i}; its even
        // projection satisfies the source formula
        if (auto ys = sat_bruteforce(mono.formula)) {
            Assignment back;
            for (int i = 0; i < f.var_count; ++i) {
                CHECK(ys->values[2 * i + 1] == !ys->values[2 * i]);
                back.values.push_back(ys->values[2 * i]);
            }
            CHECK(satisfies(f, back));
        }
    }
}

TEST_CASE("cover reduction gadget shape") {
    const auto f = make_formula(2, {{{0, true}, {1, true}}});
    const auto art = monotone_to_mmvc(f);
    CHECK(art.graph.vertex_count() == 9);
    CHECK(art.graph.edge_count() == 8); // 3 per gadget + one per literal
    CHECK(art.k == 5);
    REQUIRE(art.variables.size() == 2);
    CHECK(art.clause_vertices == std::vector<int>{8});
    CHECK(art.graph.adjacent(8, art.variables[0].pos));
    CHECK(art.graph.adjacent(8, art.variables[1].pos));
    CHECK_FALSE(art.graph.adjacent(8, art.variables[0].neg));

    // each gadget is an induced path ell-pos-neg-r
    for (const auto& vg : art.variables) {
        const Graph path = art.graph.induced(VertexSet({vg.ell, vg.pos, vg.neg, vg.r}));
        CHECK(path.edge_count() == 3);
        CHECK(path.degree(0) == 1);
        CHECK(path.degree(3) == 1);
    }
    CHECK(is_bipartite(art.graph).has_value());

    // pos+neg of every gadget is a cover of size 2n, and the disjoint edges
    // ell-pos, neg-r form a matching of the same size: both are optimal
    std::vector<int> posneg;
    for (const auto& vg : art.variables) {
        posneg.push_back(vg.pos);
        posneg.push_back(vg.neg);
    }
    CHECK(is_vertex_cover(art.graph, VertexSet(posneg)));
    const auto coloring = is_bipartite(art.graph);
    CHECK(kuhn_max_matching(art.graph, *coloring) == 4);

    const auto empty = monotone_to_mmvc(make_formula(0, {}));
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.k == 0);

    CHECK_THROWS_AS(monotone_to_mmvc(make_formula(2, {{{0, true}, {1, false}}})), InputError);
    CHECK_THROWS_AS(monotone_to_mmvc(make_formula(1, {{}})), InputError);
    CHECK_THROWS_AS(monotone_to_mmvc(make_formula(1, {{{2, true}}})), InputError);
}

TEST_CASE("assignment encoding yields minimal covers of size k") {
    const auto unit_pos = make_formula(1, {{{0, true}}});
    const auto art_pos = monotone_to_mmvc(unit_pos);
    Assignment yes;
    yes.values = {true};
    const VertexSet cover = encode_assignment(art_pos, yes);
    CHECK(cover.ids() == std::vector<int>{0, 2, 4});

    // a non-satisfying assignment cannot produce a minimal cover: the clause
    // vertex loses its private edge
    Assignment no;
    no.values = {false};
    CHECK_THROWS_AS(encode_assignment(art_pos, no), BoundViolationError);

    const auto unit_neg = make_formula(1, {{{0, false}}});
    const auto art_neg = monotone_to_mmvc(unit_neg);
    const VertexSet ncover = encode_assignment(art_neg, no);
    CHECK(ncover.ids() == std::vector<int>{1, 3, 4});

    const auto pair = make_formula(2, {{{0, true}, {1, true}}});
    const auto art = monotone_to_mmvc(pair);
    Assignment both;
    both.values = {true, true};
    const VertexSet c2 = encode_assignment(art, both);
    CHECK(c2.size() == 5);
    CHECK(c2.ids() == std::vector<int>{0, 2, 4, 6, 8});

    Assignment wrong_size;
    wrong_size.values = {true};
    CHECK_THROWS_AS(encode_assignment(art, wrong_size), InputError);
}

TEST_CASE("decoding recovers satisfying assignments") {
    const auto f = make_formula(2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}});
    const auto art = monotone_to_mmvc(f);
    CHECK(art.graph.vertex_count() == 10);
    CHECK(art.k == 6);

    for (const bool v0 : {false, true}) {
        const bool v1 = !v0; // the satisfying assignments are the two mixed ones
        Assignment a;
        a.values = {v0, v1};
        const VertexSet cover = encode_assignment(art, a);
        const Assignment back = decode_assignment(art, f, cover);
        CHECK(back.values == a.values);
    }

    CHECK_THROWS_AS(decode_assignment(art, f, VertexSet(std::vector<int>{0, 2})), InputError);
    // a full gadget column is a vertex cover but not a minimal one
    CHECK_THROWS_AS(
        decode_assignment(art, f,
                          VertexSet(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9})),
        InputError);
}

TEST_CASE("minimal covers above the threshold are exactly the satisfying assignments") {
    // satisfiable: two mixed assignments; unsatisfiable: x0 and not x0
    const auto sat_f = make_formula(2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}});
    const auto unsat_f = make_formula(1, {{{0, true}}, {{0, false}}});

    const auto sat_art = monotone_to_mmvc(sat_f);
    const auto sat_covers = minimal_covers_at_least(sat_art.graph, sat_art.k);
    CHECK_FALSE(sat_covers.empty());
    for (const auto& cover : sat_covers) {
        // structure: both vertices of each gadget state, every clause vertex
        for (const auto& vg : sat_art.variables) {
            int in_gadget = 0;
            for (int v : {vg.ell, vg.pos, vg.neg, vg.r}) in_gadget += cover.contains(v);
            CHECK(in_gadget == 2);
        }
        for (int cj : sat_art.clause_vertices) CHECK(cover.contains(cj));
        const Assignment a = decode_assignment(sat_art, sat_f, cover);
        CHECK(satisfies(sat_f, a));
    }
    // the exact solver agrees that the threshold is reached
    CHECK(mmvc_exact(sat_art.graph).size() >= sat_art.k);

    const auto unsat_art = monotone_to_mmvc(unsat_f);
    CHECK(minimal_covers_at_least(unsat_art.graph, unsat_art.k).empty());
    CHECK(mmvc_exact(unsat_art.graph).size() < unsat_art.k);
}

TEST_CASE("full pipeline from mixed CNF to cover and back") {
    // (x0 or not x1) and (x1 or not x0): satisfied exactly when x0 == x1
    const auto f = make_formula(
        2, {{{0, true}, {1, false}}, {{1, true}, {0, false}}});
    CHECK_FALSE(f.is_monotone());

    const auto split = sat_to_monotone(f);
    const auto art = monotone_to_mmvc(split.formula);
    CHECK(art.graph.vertex_count() == 4 * 4 + 6);
    CHECK(art.k == 2 * 4 + 6);

    const VertexSet best = mmvc_exact(art.graph, 24);
    REQUIRE(static_cast<long long>(best.size()) >= art.k);
    const Assignment ys = decode_assignment(art, split.formula, best);
    Assignment original;
    for (const auto& [pos_var, neg_var] : split.var_map) {
        CHECK(ys.values[neg_var] == !ys.values[pos_var]);
        original.values.push_back(ys.values[pos_var]);
    }
    CHECK(satisfies(f, original));
    CHECK(original.values[0] == original.values[1]);
}

TEST_CASE("DIMACS round trip and parse failures") {
    const auto f = make_formula(
        3, {{{0, true}, {2, false}}, {{1, true}}, {{0, false}, {1, false}, {2, true}}});
    std::ostringstream out;
    write_dimacs_cnf(out, f, "round trip");
    std::istringstream in(out.str());
    const CnfFormula back = read_dimacs_cnf(in);
    CHECK(back.var_count == 3);
    REQUIRE(back.clauses.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(back.clauses[j].size() == f.clauses[j].size());
        for (std::size_t i = 0; i < f.clauses[j].size(); ++i) {
            CHECK(back.clauses[j][i].var == f.clauses[j][i].var);
            CHECK(back.clauses[j][i].positive == f.clauses[j][i].positive);
        }
    }

    const auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return read_dimacs_cnf(s);
    };

    // clauses may span lines; comments and duplicate literals are handled
    const CnfFormula spans = parse("c demo\np cnf 2 2\n1\n-2 0 2\n0\n");
    REQUIRE(spans.clauses.size() == 2);
    CHECK(spans.clauses[0].size() == 2);
    REQUIRE(spans.clauses[1].size() == 1);
    CHECK(spans.clauses[1][0].var == 1);

    const CnfFormula dedup = parse("p cnf 2 1\n1 1 -2 1 0\n");
    REQUIRE(dedup.clauses.size() == 1);
    REQUIRE(dedup.clauses[0].size() == 2);
    CHECK(dedup.clauses[0][0].var == 0);
    CHECK(dedup.clauses[0][0].positive);
    CHECK(dedup.clauses[0][1].var == 1);
    CHECK_FALSE(dedup.clauses[0][1].positive);

    // opposite polarities survive deduplication (tautological clause)
    const CnfFormula taut = parse("p cnf 1 1\n1 -1 1 0\n");
    REQUIRE(taut.clauses[0].size() == 2);
    CHECK(sat_bruteforce(taut).has_value());

    const auto expect_error = [&](const std::string& text, long line) {
        try {
            parse(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("1 0\n", 1);                       // clause before header
    expect_error("p cnf -1 2\n", 1);                // negative counts
    expect_error("p dnf 1 1\n1 0\n", 1);            // wrong kind
    expect_error("p cnf 1 1\n2 0\n", 2);            // literal out of range
    expect_error("p cnf 1 1\n-2 0\n", 2);           // negative literal out of range
    expect_error("p cnf 1 2\n1 0\n", 2);            // clause count mismatch
    expect_error("p cnf 1 1\n1\n", 2);              // unterminated clause
    expect_error("p cnf 1 1\np cnf 1 1\n", 2);      // duplicate header
    expect_error("", 0);                            // missing header entirely
}
