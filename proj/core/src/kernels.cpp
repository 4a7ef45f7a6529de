#include "mmvc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmvc/errors.hpp"
#include "mmvc/minimal_cover.hpp"

namespace mmvc {

KernelOutcome KernelOutcome::yes(VertexSet w, std::vector<std::string> rules) {
    KernelOutcome out;
    out.kind = Kind::DecidedYes;
    out.witness = std::move(w);
    out.fired_rules = std::move(rules);
    return out;
}

KernelOutcome KernelOutcome::no(std::vector<std::string> rules) {
    KernelOutcome out;
    out.kind = Kind::DecidedNo;
    out.fired_rules = std::move(rules);
    return out;
}

Rational ClassBound::delta() const {
    switch (family) {
        case Family::Kt: return Rational(1, t - 1);
        case Family::Bull: return Rational(1, 4);
        case Family::TBull: return t == 3 ? Rational(1, 4) : Rational(4, t + 17);
        case Family::Paw: return Rational(1, 3);
        default: throw InputError("class has no homogeneous-set exponent");
    }
}

namespace {

// ceil(c * (k-1)^e) + (k-1) with c = mult/(2^avoid - 1); shared shape of all
// the subquadratic bounds.
long long ceil_bound(long long k, long double mult, long double avoid_exp, long double e) {
    const long double c = mult / (std::pow(2.0L, avoid_exp) - 1.0L);
    const long double term = c * std::pow(static_cast<long double>(k - 1), e);
    return static_cast<long long>(std::ceil(term)) + (k - 1);
}

} // namespace

long long ClassBound::bound(long long k) const {
    switch (family) {
        case Family::General: return k * k - 1;
        case Family::Kt: {
            const long double tm1 = static_cast<long double>(t - 1);
            return ceil_bound(k, tm1, (t - 2) / tm1, (2.0L * t - 3) / tm1);
        }
        case Family::Bull: return ceil_bound(k, 2.0L, 0.75L, 1.75L);
        case Family::TBull: {
            const long double d = delta().value_ld();
            return ceil_bound(k, static_cast<long double>(t - 1), 1.0L - d, 2.0L - d);
        }
        case Family::Paw: return ceil_bound(k, 2.0L, 2.0L / 3.0L, 5.0L / 3.0L);
        case Family::K1t: return static_cast<long long>(t) * (k - 1);
    }
    throw InputError("unknown class family");
}

std::string ClassBound::formula() const {
    switch (family) {
        case Family::General: return "k^2 - 1";
        case Family::Kt: {
            const std::string tm1 = std::to_string(t - 1);
            return "ceil(" + tm1 + "/(2^(" + std::to_string(t - 2) + "/" + tm1 +
                   ") - 1) * (k-1)^(" + std::to_string(2 * t - 3) + "/" + tm1 + ")) + k - 1";
        }
        case Family::Bull: return "ceil(2/(2^(3/4) - 1) * (k-1)^(7/4)) + k - 1";
        case Family::TBull: {
            const Rational d = delta();
            const Rational e = Rational(2) - d;
            return "ceil(" + std::to_string(t - 1) + "/(2^(" + (Rational(1) - d).str() +
                   ") - 1) * (k-1)^(" + e.str() + ")) + k - 1";
        }
        case Family::Paw: return "ceil(2/(2^(2/3) - 1) * (k-1)^(5/3)) + k - 1";
        case Family::K1t: return std::to_string(t) + " * (k-1)";
    }
    return "?";
}

std::string ClassBound::name() const {
    switch (family) {
        case Family::General: return "general";
        case Family::Kt: return "K_" + std::to_string(t) + "-free";
        case Family::Bull: return "bull-free";
        case Family::TBull: return std::to_string(t) + "-bull-free";
        case Family::Paw: return "paw-free";
        case Family::K1t: return "K_{1," + std::to_string(t) + "}-free";
    }
    return "?";
}

std::optional<PatternId> ClassBound::forbidden_pattern() const {
    switch (family) {
        case Family::General: return std::nullopt;
        case Family::Kt: return t <= 8 ? std::optional(PatternId::complete(t)) : std::nullopt;
        case Family::Bull: return PatternId::bull();
        case Family::TBull:
            return t <= 6 ? std::optional(PatternId::tbull(t)) : std::nullopt;
        case Family::Paw: return PatternId::paw();
        case Family::K1t: return t <= 7 ? std::optional(PatternId::star(t)) : std::nullopt;
    }
    return std::nullopt;
}

Extractor ClassBound::default_extractor() const {
    switch (family) {
        case Family::Kt: return Extractor::ramsey(t);
        case Family::Paw: return Extractor::olariu();
        case Family::Bull:
        case Family::TBull: return Extractor::brute(delta());
        default: throw InputError("class " + name() + " does not use a partition extractor");
    }
}

namespace {

void verify_membership(const Graph& g, const ClassBound& cls) {
    if (auto pattern = cls.forbidden_pattern()) {
        if (auto found = find_induced(g, *pattern))
            throw NotInClassError(
                "graph is not " + cls.name() + ": induced " + pattern->name() + " at " +
                    found->str(),
                found->ids());
    }
}

struct CommonRules {
    std::optional<KernelOutcome> decided;
    RelabeledGraph residual; // isolate-free
    std::vector<std::string> rules;
    VertexSet greedy_cover;
};

// Rules shared by every cover kernel: drop isolated vertices, then try the
// two yes-rules.  A vertex of degree >= k extends (as the neighborhood of the
// independent set {v}) into a minimal cover of size >= k; so does a greedy
// minimal cover that is already large.  Witnesses are built on the original
// graph so callers can verify them directly.
CommonRules run_common_rules(const MmvcInstance& inst) {
    if (inst.k < 1) throw InputError("parameter k must be >= 1");
    const Graph& g = inst.graph;
    CommonRules out;
    out.residual = remove_isolated(g);
    if (out.residual.graph.vertex_count() < g.vertex_count())
        out.rules.push_back("drop-isolated");

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= inst.k) {
            out.rules.push_back("high-degree");
            VertexSet w = extend_nbhd_to_minimal_vc(g, VertexSet({v}));
            out.decided = KernelOutcome::yes(std::move(w), out.rules);
            return out;
        }
    }

    out.greedy_cover = greedy_minimal_vc(g);
    if (out.greedy_cover.size() >= inst.k) {
        out.rules.push_back("greedy-cover");
        out.decided = KernelOutcome::yes(out.greedy_cover, out.rules);
        return out;
    }
    return out;
}

KernelOutcome reduced_outcome(CommonRules&& common, long long k, long long declared_bound,
                              const std::string& bound_name) {
    if (common.residual.graph.vertex_count() > declared_bound)
        throw BoundViolationError(
            "reduced instance has " + std::to_string(common.residual.graph.vertex_count()) +
            " vertices, above the guaranteed " + bound_name + " = " +
            std::to_string(declared_bound));
    KernelOutcome out;
    out.kind = KernelOutcome::Kind::Reduced;
    out.reduced = MmvcInstance{std::move(common.residual.graph), k};
    out.declared_bound = declared_bound;
    out.reduced_to_original = std::move(common.residual.new_to_old);
    out.fired_rules = std::move(common.rules);
    return out;
}

} // namespace

KernelOutcome kernel_general(const MmvcInstance& inst) {
    CommonRules common = run_common_rules(inst);
    if (common.decided) return *std::move(common.decided);
    return reduced_outcome(std::move(common), inst.k, inst.k * inst.k - 1, "k^2 - 1");
}

KernelOutcome kernel_hfree(const MmvcInstance& inst, const ClassBound& cls,
                           const Extractor& extractor, bool verify_class) {
    switch (cls.family) {
        case ClassBound::Family::Kt:
        case ClassBound::Family::Bull:
        case ClassBound::Family::TBull:
        case ClassBound::Family::Paw: break;
        default:
            throw InputError("kernel_hfree expects an Erdos-Hajnal class, got " + cls.name());
    }
    if (verify_class) verify_membership(inst.graph, cls);

    CommonRules common = run_common_rules(inst);
    if (common.decided) return *std::move(common.decided);

    // Partition the greedy cover X into cliques and independent sets.  An
    // independent part whose outside neighborhood (in S = V \ X) reaches k
    // extends into a minimal cover of size >= k.
    const Graph& g = inst.graph;
    const VertexSet& x = common.greedy_cover;
    EhPartition partition = eh_partition(g.induced(x), extractor);

    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x) in_x[v] = 1;
    for (const auto& part : partition.indep_sets) {
        std::vector<int> orig;
        orig.reserve(part.vertices.size());
        for (int v : part.vertices) orig.push_back(x[v]);
        VertexSet part_orig(std::move(orig));
        int outside = 0;
        for (int v : g.neighborhood(part_orig))
            if (!in_x[v]) ++outside;
        if (outside >= inst.k) {
            common.rules.push_back("independent-part-neighborhood");
            return KernelOutcome::yes(extend_nbhd_to_minimal_vc(g, part_orig),
                                      std::move(common.rules));
        }
    }

    return reduced_outcome(std::move(common), inst.k, cls.bound(inst.k), cls.formula());
}

KernelOutcome kernel_hfree(const MmvcInstance& inst, const ClassBound& cls, bool verify_class) {
    return kernel_hfree(inst, cls, cls.default_extractor(), verify_class);
}

KernelOutcome kernel_k1t(const MmvcInstance& inst, int t, bool verify_class) {
    if (t < 1) throw InputError("K_{1,t}-free kernel requires t >= 1");
    const ClassBound cls = ClassBound::k1t(t);
    if (verify_class) verify_membership(inst.graph, cls);
    CommonRules common = run_common_rules(inst);
    if (common.decided) return *std::move(common.decided);
    return reduced_outcome(std::move(common), inst.k, cls.bound(inst.k), cls.formula());
}

KernelOutcome kernel_colored(const MmvcInstance& inst, const std::vector<int>& coloring) {
    if (inst.k < 1) throw InputError("parameter k must be >= 1");
    const Graph& g = inst.graph;
    if (static_cast<int>(coloring.size()) != g.vertex_count())
        throw InputError("coloring size does not match vertex count");
    int max_color = -1;
    for (int c : coloring) {
        if (c < 0) throw InputError("negative color");
        max_color = std::max(max_color, c);
    }
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            throw InputError("coloring is not proper: edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") is monochromatic");

    std::vector<std::string> rules;
    RelabeledGraph residual = remove_isolated(g);
    if (residual.graph.vertex_count() < g.vertex_count()) rules.push_back("drop-isolated");

    // Color classes are independent sets; a class with a large neighborhood
    // answers yes exactly like an independent partition part.
    std::vector<std::vector<int>> members(static_cast<std::size_t>(max_color) + 1);
    for (int v = 0; v < g.vertex_count(); ++v) members[coloring[v]].push_back(v);
    long long used_colors = 0;
    for (int c = 0; c <= max_color; ++c) {
        if (members[c].empty()) continue;
        ++used_colors;
        VertexSet cls_set = VertexSet::from_sorted(std::move(members[c]));
        if (g.neighborhood(cls_set).size() >= inst.k) {
            rules.push_back("color-class-neighborhood");
            return KernelOutcome::yes(extend_nbhd_to_minimal_vc(g, cls_set), std::move(rules));
        }
    }

    // Every non-isolated vertex lies in some class neighborhood, so at most
    // c(k-1) vertices survive.
    const long long declared = used_colors * (inst.k - 1);
    CommonRules shim;
    shim.residual = std::move(residual);
    shim.rules = std::move(rules);
    return reduced_outcome(std::move(shim), inst.k, declared, "c(k-1)");
}

KernelOutcome mis_ktfree_lop_kernel(const Graph& g, long long k, int t, bool verify_class) {
    if (k < 1) throw InputError("parameter k must be >= 1");
    if (t < 3) throw InputError("K_t-free MIS kernel requires t >= 3");
    if (verify_class && t <= 8) {
        if (auto clique = find_induced(g, PatternId::complete(t)))
            throw NotInClassError("graph is not K_" + std::to_string(t) + "-free: clique at " +
                                      clique->str(),
                                  clique->ids());
    }
    const long long threshold = saturating_pow(k, t - 1);
    if (g.vertex_count() >= threshold) {
        VertexSet is = ramsey_is_extract(g, t, /*validate=*/false);
        if (is.size() < k)
            throw BoundViolationError(
                "Ramsey extraction returned " + std::to_string(is.size()) +
                " vertices on a graph of size >= k^(t-1); expected at least k=" +
                std::to_string(k));
        KernelOutcome out = KernelOutcome::yes(std::move(is), {"size-threshold"});
        return out;
    }
    KernelOutcome out;
    out.kind = KernelOutcome::Kind::Reduced;
    out.reduced = MmvcInstance{g, k};
    out.declared_bound = threshold - 1;
    out.reduced_to_original.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.reduced_to_original[v] = v;
    return out;
}

namespace {

void diagnose_tbull(const Graph& g, const VertexSet& clique, int t, CliqueDiagnostic& out) {
    // S: complement of the greedy minimal cover, the independent set the
    // kernel argument ranges over.
    const VertexSet cover = greedy_minimal_vc(g);
    std::vector<char> in_s(g.vertex_count(), 1), in_c(g.vertex_count(), 0);
    for (int v : cover) in_s[v] = 0;
    for (int v : clique) in_c[v] = 1;

    Bitset cmask(g.vertex_count());
    for (int v : clique) cmask.set(v);
    auto nc = [&](int v) { return g.row(v) & cmask; };
    const int limit = clique.size() - (t - 2);

    // Greedy S_C^1 over N(C) n S in id order.
    std::vector<int> s1, s2;
    for (int v : g.neighborhood(clique)) {
        if (!in_s[v]) continue;
        Bitset nv = nc(v);
        bool ok = nv.count() <= limit;
        for (int y : s1) {
            if (!ok) break;
            ok = (nv | nc(y)).count() <= limit;
        }
        (ok ? s1 : s2).push_back(v);
    }
    out.s1 = VertexSet::from_sorted(s1);
    out.s2 = VertexSet::from_sorted(s2);

    // Chain property: sorted by |N_C|, each neighborhood contains the last.
    std::vector<int> by_size = s1;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](int a, int b) { return nc(a).count() < nc(b).count(); });
    for (std::size_t i = 1; i < by_size.size(); ++i) {
        if (!nc(by_size[i - 1]).subset_of(nc(by_size[i]))) {
            out.chain_ok = false;
            out.violations.push_back({"chain property failed between " +
                                          std::to_string(by_size[i - 1]) + " and " +
                                          std::to_string(by_size[i]),
                                      VertexSet({by_size[i - 1], by_size[i]})});
        }
    }

    if (out.chain_ok && !s1.empty()) {
        // Common neighbor: the least vertex of the smallest C-neighborhood.
        Bitset common = nc(by_size[0]);
        for (int v : s1) common &= nc(v);
        if (common.any())
            out.common_neighbor = common.find_first();
        else
            out.violations.push_back(
                {"S_C^1 has no common clique neighbor despite the chain property",
                 out.s1});
    }

    if (out.chain_ok) {
        // t-2 clique vertices outside every N_C(y), y in S_C^1; each member
        // of S_C^2 must see one of them.  With a nonempty S_C^1 and the chain
        // intact these vertices are guaranteed to exist; an empty S_C^1 on a
        // clique smaller than t-2 makes the argument vacuous, so skip it.
        Bitset uncovered = cmask;
        for (int y : s1) uncovered.and_not(nc(y));
        std::vector<int> zs;
        for (int z = uncovered.find_first(); z >= 0 && static_cast<int>(zs.size()) < t - 2;
             z = uncovered.find_next(z))
            zs.push_back(z);
        if (static_cast<int>(zs.size()) < t - 2) {
            if (!s1.empty())
                out.violations.push_back(
                    {"fewer than t-2 clique vertices avoid all S_C^1 neighborhoods", out.s1});
        } else {
            out.covering_vertices = VertexSet(zs);
            for (int x : s2) {
                bool covered = false;
                for (int z : zs)
                    if (g.adjacent(x, z)) covered = true;
                if (!covered)
                    out.violations.push_back(
                        {"S_C^2 vertex " + std::to_string(x) + " misses all covering vertices",
                         VertexSet({x})});
            }
        }
    }

    // Direct pairwise audit over all of N(C): any nonadjacent pair with a
    // small joint neighborhood and incomparable C-neighborhoods yields an
    // induced t-bull regardless of where the greedy cover put them.
    const VertexSet nbhd = g.neighborhood(clique);
    for (int i = 0; i < nbhd.size(); ++i) {
        for (int j = i + 1; j < nbhd.size(); ++j) {
            const int xv = nbhd[i], yv = nbhd[j];
            if (g.adjacent(xv, yv)) continue;
            Bitset nx = nc(xv), ny = nc(yv);
            if (nx.none() || ny.none()) continue;
            if ((nx | ny).count() > limit) continue;
            if (!nx.subset_of(ny) && !ny.subset_of(nx)) {
                out.chain_ok = false;
                out.violations.push_back({"nonadjacent pair (" + std::to_string(xv) + "," +
                                              std::to_string(yv) +
                                              ") has incomparable clique neighborhoods",
                                          VertexSet({xv, yv})});
            }
        }
    }
}

void diagnose_paw(const Graph& g, const VertexSet& clique, CliqueDiagnostic& out) {
    if (clique.size() < 2) return;
    Bitset cmask(g.vertex_count());
    for (int v : clique) cmask.set(v);
    for (int v : g.neighborhood(clique)) {
        const int seen = g.row(v).count_and(cmask);
        if (seen < clique.size() - 1)
            out.violations.push_back({"neighbor " + std::to_string(v) + " sees only " +
                                          std::to_string(seen) + " of " +
                                          std::to_string(clique.size()) + " clique vertices",
                                      VertexSet({v})});
    }
}

} // namespace

CliqueDiagnostic clique_neighborhood_diagnostic(const Graph& g, const VertexSet& clique,
                                                const ClassBound& cls) {
    if (!g.is_clique(clique)) throw InputError("diagnostic seed set is not a clique");
    for (int v : clique)
        if (v < 0 || v >= g.vertex_count()) throw InputError("clique vertex out of range");

    CliqueDiagnostic out;
    out.clique = clique;
    switch (cls.family) {
        case ClassBound::Family::Bull:
        case ClassBound::Family::TBull:
            diagnose_tbull(g, clique, cls.family == ClassBound::Family::Bull ? 3 : cls.t, out);
            break;
        case ClassBound::Family::Paw:
            diagnose_paw(g, clique, out);
            break;
        default:
            throw InputError("diagnostic supports bull, t-bull and paw classes only");
    }

    if (!out.violations.empty()) {
        if (auto pattern = cls.forbidden_pattern())
            if (auto found = find_induced(g, *pattern)) out.located_pattern = *found;
    }
    return out;
}

} // namespace mmvc
