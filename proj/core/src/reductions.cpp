#include "mmvc/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mmvc/errors.hpp"
#include "mmvc/minimal_cover.hpp"

namespace mmvc {

bool CnfFormula::is_monotone() const {
    for (const auto& clause : clauses) {
        bool has_pos = false, has_neg = false;
        for (const auto& lit : clause) (lit.positive ? has_pos : has_neg) = true;
        if (has_pos && has_neg) return false;
    }
    return true;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (const auto& lit : clause) {
            if (a.values[lit.var] == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> sat_bruteforce(const CnfFormula& f, int cap) {
    if (f.var_count > cap)
        throw CapExceededError("SAT brute force capped at " + std::to_string(cap) +
                               " variables, got " + std::to_string(f.var_count));
    for (const auto& clause : f.clauses) {
        if (clause.empty()) return std::nullopt;
        for (const auto& lit : clause)
            if (lit.var < 0 || lit.var >= f.var_count)
                throw InputError("literal variable out of range");
    }

    const int n = f.var_count;
    Assignment a;
    a.values.assign(n, false);
    const unsigned long long total = 1ULL << n;
    for (unsigned long long bits = 0; bits < total; ++bits) {
        // x_0 is the most significant bit: enumeration order matches reading
        // the assignment tuple as a binary string.
        for (int i = 0; i < n; ++i) a.values[i] = (bits >> (n - 1 - i)) & 1ULL;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

MonotoneSplit sat_to_monotone(const CnfFormula& f) {
    MonotoneSplit out;
    out.formula.var_count = 2 * f.var_count;
    out.var_map.reserve(f.var_count);
    for (int i = 0; i < f.var_count; ++i) out.var_map.emplace_back(2 * i, 2 * i + 1);

    for (const auto& clause : f.clauses) {
        std::vector<Literal> image;
        image.reserve(clause.size());
        for (const auto& lit : clause)
            image.push_back({lit.positive ? 2 * lit.var : 2 * lit.var + 1, true});
        out.formula.clauses.push_back(std::move(image));
    }
    for (int i = 0; i < f.var_count; ++i) {
        out.formula.clauses.push_back({{2 * i, true}, {2 * i + 1, true}});
        out.formula.clauses.push_back({{2 * i, false}, {2 * i + 1, false}});
    }
    return out;
}

MmvcReductionArtifact monotone_to_mmvc(const CnfFormula& f) {
    if (!f.is_monotone())
        throw InputError("reduction requires a monotone formula (no mixed clauses)");
    for (const auto& clause : f.clauses) {
        if (clause.empty())
            throw InputError("reduction requires nonempty clauses");
        for (const auto& lit : clause)
            if (lit.var < 0 || lit.var >= f.var_count)
                throw InputError("literal variable out of range");
    }

    const int n = f.var_count;
    const int m = static_cast<int>(f.clauses.size());
    MmvcReductionArtifact art;
    art.graph = Graph(4 * n + m);
    art.k = 2LL * n + m;
    art.variables.reserve(n);
    for (int i = 0; i < n; ++i) {
        const VariableGadget vg{4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
        art.graph.add_edge(vg.ell, vg.pos);
        art.graph.add_edge(vg.pos, vg.neg);
        art.graph.add_edge(vg.neg, vg.r);
        art.variables.push_back(vg);
    }
    for (int j = 0; j < m; ++j) {
        const int cj = 4 * n + j;
        art.clause_vertices.push_back(cj);
        for (const auto& lit : f.clauses[j]) {
            const auto& vg = art.variables[lit.var];
            art.graph.add_edge(cj, lit.positive ? vg.pos : vg.neg);
        }
    }
    return art;
}

VertexSet encode_assignment(const MmvcReductionArtifact& art, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != static_cast<int>(art.variables.size()))
        throw InputError("assignment size does not match the reduction");
    std::vector<int> cover(art.clause_vertices.begin(), art.clause_vertices.end());
    for (std::size_t i = 0; i < art.variables.size(); ++i) {
        const auto& vg = art.variables[i];
        if (a.values[i]) {
            cover.push_back(vg.neg);
            cover.push_back(vg.ell);
        } else {
            cover.push_back(vg.pos);
            cover.push_back(vg.r);
        }
    }
    VertexSet result(std::move(cover));
    if (!is_minimal_vertex_cover(art.graph, result) ||
        static_cast<long long>(result.size()) != art.k)
        throw BoundViolationError(
            "encoded cover is not a minimal vertex cover of size k; the "
            "assignment cannot satisfy the source formula");
    return result;
}

Assignment decode_assignment(const MmvcReductionArtifact& art, const CnfFormula& f,
                             const VertexSet& cover) {
    if (static_cast<long long>(cover.size()) < art.k)
        throw InputError("cover smaller than the reduction threshold k");
    if (!is_minimal_vertex_cover(art.graph, cover))
        throw InputError("decode requires a minimal vertex cover");
    Assignment a;
    a.values.reserve(art.variables.size());
    for (const auto& vg : art.variables) {
        if (!cover.contains(vg.pos))
            a.values.push_back(true);
        else if (!cover.contains(vg.neg))
            a.values.push_back(false);
        else
            a.values.push_back(true); // both covered: either value works
    }
    if (!satisfies(f, a))
        throw BoundViolationError(
            "decoded assignment fails the formula; a minimal cover of size >= k "
            "cannot exist for an unsatisfiable input");
    return a;
}

CnfFormula read_dimacs_cnf(std::istream& in) {
    std::string line;
    long lineno = 0;
    long declared_vars = -1, declared_clauses = -1;
    CnfFormula f;
    std::vector<Literal> current;
    bool in_clause = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (declared_vars >= 0) throw ParseError("duplicate 'p' header", lineno);
            if (!(ls >> kind >> declared_vars >> declared_clauses) || kind != "cnf" ||
                declared_vars < 0 || declared_clauses < 0)
                throw ParseError("expected 'p cnf <vars> <clauses>'", lineno);
            f.var_count = static_cast<int>(declared_vars);
            continue;
        }
        if (declared_vars < 0) throw ParseError("clause data before 'p cnf' header", lineno);
        // Clause tokens; clauses may span lines and end at 0.
        ls.clear();
        ls.str(line);
        long v;
        while (ls >> v) {
            if (v == 0) {
                // Drop repeated literals, keeping first occurrences.  Opposite
                // polarities of one variable are both kept (the clause is then
                // tautological and downstream consumers treat it as such).
                std::vector<Literal> dedup;
                for (const auto& lit : current)
                    if (std::find(dedup.begin(), dedup.end(), lit) == dedup.end())
                        dedup.push_back(lit);
                f.clauses.push_back(std::move(dedup));
                current.clear();
                in_clause = false;
            } else {
                const long var = (v > 0 ? v : -v) - 1;
                if (var >= declared_vars)
                    throw ParseError("literal " + std::to_string(v) + " out of range", lineno);
                current.push_back({static_cast<int>(var), v > 0});
                in_clause = true;
            }
        }
        if (ls.fail() && !ls.eof()) throw ParseError("malformed clause token", lineno);
    }
    if (in_clause) throw ParseError("unterminated clause (missing 0)", lineno);
    if (declared_vars < 0) throw ParseError("missing 'p cnf' header", lineno);
    if (static_cast<long>(f.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                             " clauses but file has " + std::to_string(f.clauses.size()),
                         lineno);
    return f;
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p cnf " << f.var_count << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
        out << "0\n";
    }
}

CnfFormula read_dimacs_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open CNF file: " + path);
    return read_dimacs_cnf(in);
}

void write_dimacs_cnf_file(const std::string& path, const CnfFormula& f,
                           const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_dimacs_cnf(out, f, comment);
}

} // namespace mmvc
