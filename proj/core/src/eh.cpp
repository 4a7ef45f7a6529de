#include "mmvc/eh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmvc/errors.hpp"
#include "mmvc/patterns.hpp"

namespace mmvc {
namespace {

VertexSet map_back(const VertexSet& local, const std::vector<int>& new_to_old) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(new_to_old[v]);
    return VertexSet(std::move(out));
}

// Core of the Ramsey-type extraction; class membership is guaranteed by the
// caller (recursive calls pass neighborhoods of K_t-free graphs, which are
// K_{t-1}-free by definition).
VertexSet ramsey_rec(const Graph& g, int t) {
    const int n = g.vertex_count();
    if (n == 0) return VertexSet();
    if (t <= 2) { // K_2-free means edgeless: everything is independent
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return VertexSet::from_sorted(std::move(all));
    }
    int vmax = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(vmax)) vmax = v;
    const long long delta_deg = g.degree(vmax);

    // Dense test Delta >= n^((t-2)/(t-1)), decided exactly via
    // Delta^(t-1) >= n^(t-2).
    if (saturating_pow(delta_deg, t - 1) >= saturating_pow(n, t - 2)) {
        std::vector<int> nb = g.neighbors(vmax);
        VertexSet nbs = VertexSet::from_sorted(std::move(nb));
        VertexSet sub = ramsey_rec(g.induced(nbs), t - 1);
        return map_back(sub, nbs.ids());
    }

    // Sparse: each greedy pick deletes at most Delta+1 vertices, giving at
    // least n/(Delta+1) > n^(1/(t-1)) - 1 picks.
    Bitset alive(n);
    alive.set_all();
    std::vector<int> picks;
    for (int v = alive.find_first(); v >= 0; v = alive.find_first()) {
        picks.push_back(v);
        alive.reset(v);
        alive.and_not(g.row(v));
    }
    return VertexSet::from_sorted(std::move(picks));
}

} // namespace

VertexSet ramsey_is_extract(const Graph& g, int t, bool validate) {
    if (t < 2) throw InputError("K_t-free extraction requires t >= 2");
    if (validate && t <= 8) {
        if (auto clique = find_induced(g, PatternId::complete(t)))
            throw NotInClassError("graph contains K_" + std::to_string(t) + " at " + clique->str(),
                                  clique->ids());
    }
    return ramsey_rec(g, t);
}

namespace {

// Complete multipartite test: the co-components (components of the
// complement) must each be independent in g; cross-part adjacency is then
// automatic.  Returns the parts, or nothing if the test fails.
std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g) {
    std::vector<VertexSet> parts = g.complement().components();
    for (const auto& part : parts)
        if (!g.is_independent_set(part)) return std::nullopt;
    return parts;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.row(u).count_and(g.row(v)) > 0) return true;
    return false;
}

[[noreturn]] void throw_paw_violation(const Graph& g, const VertexSet& component) {
    // A component with a triangle that is not complete multipartite contains
    // a paw; locate one for the error payload.
    Graph sub = g.induced(component);
    if (auto paw = find_induced(sub, PatternId::paw()))
        throw NotInClassError("graph contains a paw at " + map_back(*paw, component.ids()).str(),
                              map_back(*paw, component.ids()).ids());
    throw NotInClassError(
        "component " + component.str() + " has a triangle but is not complete multipartite",
        component.ids());
}

} // namespace

HomogeneousSet paw_olariu_extract(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {HomogeneousSet::Kind::IndependentSet, VertexSet()};

    std::vector<VertexSet> comps = g.components();
    const long long target = std::max<long long>(1, floor_pow(n, Rational(1, 3)));

    // Many components: one (least) vertex per component is independent.
    if (static_cast<long long>(comps.size()) >= target) {
        std::vector<int> reps;
        reps.reserve(comps.size());
        for (const auto& c : comps) reps.push_back(c[0]);
        return {HomogeneousSet::Kind::IndependentSet, VertexSet(std::move(reps))};
    }

    // Few components: the largest one has more than n^(2/3) vertices.  Ties
    // go to the component with the least member.
    const VertexSet* big = &comps[0];
    for (const auto& c : comps)
        if (c.size() > big->size()) big = &c;
    Graph sub = g.induced(*big);

    if (!has_triangle(sub)) {
        // Triangle-free: Ramsey extraction at t=3 gives floor(sqrt(|C|)) >=
        // floor(n^(1/3)).
        VertexSet is = ramsey_is_extract(sub, 3, /*validate=*/false);
        return {HomogeneousSet::Kind::IndependentSet, map_back(is, big->ids())};
    }

    auto parts = complete_multipartite_parts(sub);
    if (!parts) throw_paw_violation(g, *big);

    // Complete multipartite: |parts| * max-part >= |C|, so the larger of the
    // two beats sqrt(|C|) >= n^(1/3).
    const VertexSet* largest = &(*parts)[0];
    for (const auto& p : *parts)
        if (p.size() > largest->size()) largest = &p;
    if (static_cast<int>(parts->size()) >= largest->size()) {
        std::vector<int> clique;
        clique.reserve(parts->size());
        for (const auto& p : *parts) clique.push_back(p[0]);
        VertexSet mapped = map_back(VertexSet(std::move(clique)), big->ids());
        const auto kind = mapped.size() == 1 ? HomogeneousSet::Kind::IndependentSet
                                             : HomogeneousSet::Kind::Clique;
        return {kind, mapped};
    }
    return {HomogeneousSet::Kind::IndependentSet, map_back(*largest, big->ids())};
}

HomogeneousSet brute_optimal_extract(const Graph& g, Rational delta, int cap) {
    const int n = g.vertex_count();
    if (n == 0) return {HomogeneousSet::Kind::IndependentSet, VertexSet()};
    VertexSet clique = max_clique_exact(g, cap);
    VertexSet indep = max_independent_set_exact(g, cap);
    const long long target = std::max<long long>(1, floor_pow(n, delta));
    if (clique.size() < target && indep.size() < target)
        throw BoundViolationError("clique-or-independent-set guarantee n^(" + delta.str() +
                                  ") failed: n=" + std::to_string(n) + " best=" +
                                  std::to_string(std::max(clique.size(), indep.size())));
    if (indep.size() >= clique.size()) return {HomogeneousSet::Kind::IndependentSet, indep};
    if (clique.size() == 1) return {HomogeneousSet::Kind::IndependentSet, clique};
    return {HomogeneousSet::Kind::Clique, clique};
}

long long eh_part_bound(long long n, Rational delta) {
    if (n <= 0) return 0;
    const long double one_minus = 1.0L - delta.value_ld();
    // delta >= 1 sends the formula's denominator to zero (the guarantee
    // swallows the whole graph in one bite); n parts is then a trivially
    // correct bound since parts are nonempty.
    if (one_minus <= 0.0L) return n;
    const long double value =
        std::pow(static_cast<long double>(n), one_minus) / (std::pow(2.0L, one_minus) - 1.0L);
    // ceil on a long double; the true value is irrational, so the half-ulp
    // ambiguity cannot straddle an integer here.
    return static_cast<long long>(std::ceil(value));
}

EhPartition eh_partition(const Graph& g, const Extractor& extractor) {
    const int n = g.vertex_count();
    EhPartition out;
    out.delta = extractor.delta;

    Bitset alive(n);
    alive.set_all();
    int remaining = n;
    // Validate class membership once; residual induced subgraphs inherit it.
    bool validate_ramsey = true;
    while (remaining > 0) {
        std::vector<int> live;
        live.reserve(remaining);
        for (int v = alive.find_first(); v >= 0; v = alive.find_next(v)) live.push_back(v);
        VertexSet live_set = VertexSet::from_sorted(std::move(live));
        Graph residual = g.induced(live_set);

        HomogeneousSet part;
        switch (extractor.strategy) {
            case Extractor::Strategy::RamseyKtFree: {
                VertexSet is = ramsey_is_extract(residual, extractor.t, validate_ramsey);
                validate_ramsey = false;
                part = {HomogeneousSet::Kind::IndependentSet, is};
                break;
            }
            case Extractor::Strategy::PawOlariu:
                part = paw_olariu_extract(residual);
                break;
            case Extractor::Strategy::BruteOptimal:
                part = brute_optimal_extract(residual, extractor.delta);
                break;
        }
        if (part.vertices.empty())
            throw BoundViolationError("extractor returned an empty part");
        part.vertices = map_back(part.vertices, live_set.ids());

        // Defensive kind check: a mislabeled part would poison the kernel
        // rules that consume independent-set parts.
        if (part.kind == HomogeneousSet::Kind::Clique && !g.is_clique(part.vertices))
            throw BoundViolationError("extractor returned a non-clique labeled clique");
        if (part.kind == HomogeneousSet::Kind::IndependentSet &&
            !g.is_independent_set(part.vertices))
            throw BoundViolationError("extractor returned a dependent set labeled independent");

        for (int v : part.vertices) alive.reset(v);
        remaining -= part.vertices.size();
        (part.kind == HomogeneousSet::Kind::Clique ? out.cliques : out.indep_sets)
            .push_back(std::move(part));
    }

    const long long bound = eh_part_bound(n, extractor.delta);
    if (out.part_count() > bound)
        throw BoundViolationError("partition used " + std::to_string(out.part_count()) +
                                  " parts, above the guaranteed " + std::to_string(bound));
    return out;
}

} // namespace mmvc
