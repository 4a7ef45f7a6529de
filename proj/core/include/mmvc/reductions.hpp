#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmvc/graph.hpp"

namespace mmvc {

struct Literal {
    int var = 0; // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<Literal>> clauses;

    bool is_monotone() const; // every clause all-positive or all-negative
};

struct Assignment {
    std::vector<bool> values;
};

bool satisfies(const CnfFormula& f, const Assignment& a);

// Exhaustive SAT check; returns the least satisfying assignment in the binary
// order that reads (x_0, x_1, ...) as a most-significant-first bit string, or
// nullopt if unsatisfiable.  Tautological clauses are treated as satisfied.
// Throws CapExceededError when var_count > cap.
std::optional<Assignment> sat_bruteforce(const CnfFormula& f, int cap = 20);

// Polarity split making any CNF monotone and equisatisfiable: variable x
// becomes x+ (for positive occurrences) and x- (for negative ones), plus the
// clauses (x+ v x-) and (~x+ v ~x-) tying them to a consistent choice.
// Clause images keep their input order, followed by the per-variable pairs.
struct MonotoneSplit {
    CnfFormula formula;
    std::vector<std::pair<int, int>> var_map; // original var -> (x+, x-)
};

MonotoneSplit sat_to_monotone(const CnfFormula& f);

// Monotone SAT as a maximum-minimal-vertex-cover threshold question.  Each
// variable x_i becomes an induced path ell_i - pos_i - neg_i - r_i; each
// clause C_j becomes a vertex adjacent to pos_i for positive occurrences and
// neg_i for negative ones.  The formula is satisfiable iff the graph has a
// minimal vertex cover of size >= k = 2n + m.  The graph is bipartite with
// 4n + m vertices and 3n + sum(|C_j|) edges.
struct VariableGadget {
    int ell, pos, neg, r;
};

struct MmvcReductionArtifact {
    Graph graph;
    long long k = 0;
    std::vector<VariableGadget> variables;
    std::vector<int> clause_vertices;
};

// Throws InputError on a non-monotone formula or an empty clause (an empty
// clause makes the formula trivially unsatisfiable, outside this map's
// domain).
MmvcReductionArtifact monotone_to_mmvc(const CnfFormula& f);

// Satisfying assignment -> minimal vertex cover of size exactly k: all clause
// vertices, plus {neg_i, ell_i} for true variables and {pos_i, r_i} for false
// ones.
VertexSet encode_assignment(const MmvcReductionArtifact& art, const Assignment& a);

// Minimal vertex cover of size >= k -> satisfying assignment: x_i is true
// when pos_i is uncovered, false when neg_i is uncovered, true by convention
// when the cover holds both.  Throws InputError if the cover is not a minimal
// vertex cover of size >= k, and BoundViolationError if the decoded
// assignment fails the formula (impossible for a valid cover).
Assignment decode_assignment(const MmvcReductionArtifact& art, const CnfFormula& f,
                             const VertexSet& cover);

// DIMACS CNF ("p cnf <vars> <clauses>", clauses are 0-terminated int lists).
CnfFormula read_dimacs_cnf(std::istream& in);
void write_dimacs_cnf(std::ostream& out, const CnfFormula& f, const std::string& comment = "");
CnfFormula read_dimacs_cnf_file(const std::string& path);
void write_dimacs_cnf_file(const std::string& path, const CnfFormula& f,
                           const std::string& comment = "");

} // namespace mmvc
