#include "mmvc/lop.hpp"

#include <algorithm>
#include <cmath>

#include "mmvc/errors.hpp"
#include "mmvc/graph_algos.hpp"

namespace mmvc {

KernelOutcome MmvcAdapter::kernel(const Graph& g, long long k) const {
    return kernel_general(MmvcInstance{g, k});
}

long long MmvcAdapter::value_oracle(const Graph& g) const {
    return mmvc_exact(g, oracle_cap_).size();
}

KernelOutcome MisKtFreeAdapter::kernel(const Graph& g, long long k) const {
    // Class membership is the caller's contract for the pipeline; the kernel
    // itself re-checks only in isolation (see mis_ktfree_lop_kernel).
    return mis_ktfree_lop_kernel(g, k, t_, /*verify_class=*/false);
}

long long MisKtFreeAdapter::value_oracle(const Graph& g) const {
    return max_independent_set_exact(g, exact_cap_).size();
}

KernelOutcome MinVcAdapter::kernel(const Graph& g, long long k) const {
    return buss_min_vc_kernel(g, k);
}

long long MinVcAdapter::value_oracle(const Graph& g) const {
    return g.vertex_count() - max_independent_set_exact(g, exact_cap_).size();
}

KernelOutcome buss_min_vc_kernel(const Graph& g, long long k) {
    if (k < 0) throw InputError("parameter k must be >= 0");
    // Work on a shrinking copy with an id map back to the input.
    Graph cur = g;
    std::vector<int> to_orig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) to_orig[v] = v;
    std::vector<std::string> rules;
    std::vector<int> forced;
    long long kk = k;

    bool changed = true;
    while (changed) {
        changed = false;
        int high = -1;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (cur.degree(v) > kk) {
                high = v;
                break;
            }
        }
        if (high >= 0) {
            // A vertex of degree > k belongs to every cover of size <= k.
            if (kk == 0) {
                rules.push_back("force-high-degree");
                return KernelOutcome::no(std::move(rules));
            }
            forced.push_back(to_orig[high]);
            --kk;
            if (rules.empty() || rules.back() != "force-high-degree")
                rules.push_back("force-high-degree");
            VertexSet keep = [&] {
                std::vector<int> ids;
                for (int v = 0; v < cur.vertex_count(); ++v)
                    if (v != high) ids.push_back(v);
                return VertexSet::from_sorted(std::move(ids));
            }();
            std::vector<int> next_map;
            next_map.reserve(keep.size());
            for (int v : keep) next_map.push_back(to_orig[v]);
            cur = cur.induced(keep);
            to_orig = std::move(next_map);
            changed = true;
            continue;
        }
        RelabeledGraph iso = remove_isolated(cur);
        if (iso.graph.vertex_count() < cur.vertex_count()) {
            if (rules.empty() || rules.back() != "drop-isolated") rules.push_back("drop-isolated");
            std::vector<int> next_map;
            next_map.reserve(iso.new_to_old.size());
            for (int v : iso.new_to_old) next_map.push_back(to_orig[v]);
            cur = std::move(iso.graph);
            to_orig = std::move(next_map);
            // Isolate removal cannot re-create high-degree vertices; no loop.
        }
    }

    if (cur.edge_count() > kk * kk) {
        // Max degree is now <= k', so a cover of size k' touches at most k'^2
        // edges.
        rules.push_back("edge-count");
        return KernelOutcome::no(std::move(rules));
    }

    KernelOutcome out;
    out.kind = KernelOutcome::Kind::Reduced;
    // Residual vertices all have degree in [1, k'], so n' <= 2 m' <= 2 k'^2.
    out.declared_bound = 2 * kk * kk;
    out.reduced = MmvcInstance{std::move(cur), kk};
    out.reduced_to_original = std::move(to_orig);
    out.forced = VertexSet(std::move(forced));
    out.fired_rules = std::move(rules);
    if (out.reduced->graph.vertex_count() > out.declared_bound)
        throw BoundViolationError("min-VC kernel residual exceeds 2k'^2");
    return out;
}

namespace {

// Map a vertex set on a reduced instance back to input ids and join with the
// forced set.
VertexSet reconstruct(const KernelOutcome& outcome, const VertexSet& reduced_solution) {
    std::vector<int> ids(outcome.forced.begin(), outcome.forced.end());
    for (int v : reduced_solution) ids.push_back(outcome.reduced_to_original[v]);
    return VertexSet(std::move(ids));
}

} // namespace

DualAnswer dual_from_kernel(const ProblemAdapter& adapter, const Graph& g, long long k) {
    DualAnswer answer;
    answer.k = k;
    answer.f_value = adapter.f(k);
    KernelOutcome outcome = adapter.kernel(g, k);

    if (adapter.orientation() == Orientation::Max) {
        // Yes-instances certify opt >= k; everything else pins opt < f(k):
        // the kernel preserves optima above k - 1, and a kernel instance has
        // at most u(s(k)) + (k - parameter drop) of headroom.
        if (outcome.kind == KernelOutcome::Kind::DecidedYes) {
            answer.kind = DualAnswer::Kind::AtLeastK;
            answer.witness = outcome.witness;
        } else {
            answer.kind = DualAnswer::Kind::BelowF;
        }
        return answer;
    }

    switch (outcome.kind) {
        case KernelOutcome::Kind::DecidedNo:
            answer.kind = DualAnswer::Kind::AboveK;
            break;
        case KernelOutcome::Kind::DecidedYes:
            answer.kind = DualAnswer::Kind::AtMostF;
            answer.witness = outcome.witness;
            break;
        case KernelOutcome::Kind::Reduced: {
            answer.kind = DualAnswer::Kind::AtMostF;
            // Constructive: any minimal cover of the residual plus the forced
            // vertices is a cover of the input within f(k).
            VertexSet residual_cover = greedy_minimal_vc(outcome.reduced->graph);
            answer.witness = reconstruct(outcome, residual_cover);
            break;
        }
    }
    return answer;
}

ApproxReport value_approx(const ProblemAdapter& adapter, const Graph& g, bool with_oracle) {
    ApproxReport report;
    const Rational c = adapter.size_exponent();
    report.ratio_exponent = Rational(c.num - c.den, c.num);

    const long long upper = adapter.upper_bound(g.vertex_count());
    if (adapter.orientation() == Orientation::Max) {
        for (long long k = 1; k <= upper; ++k) {
            DualAnswer answer = dual_from_kernel(adapter, g, k);
            if (answer.kind == DualAnswer::Kind::AtLeastK && k > report.k0) {
                report.k0 = k;
                report.witness = answer.witness;
            }
            report.answers.push_back(std::move(answer));
        }
        report.claimed_value = report.k0;
        if (report.k0 == 0) {
            // No scan point certified a solution: the optimum is below
            // max(f(0), f(1)) and the exact oracle finishes the job.
            report.exact_fallback = true;
            report.claimed_value = adapter.value_oracle(g);
            report.k0 = report.claimed_value;
        }
    } else {
        bool have_k0 = false;
        for (long long k = 0; k <= upper; ++k) {
            DualAnswer answer = dual_from_kernel(adapter, g, k);
            if (answer.kind == DualAnswer::Kind::AtMostF && !have_k0) {
                have_k0 = true;
                report.k0 = k;
                report.claimed_value = answer.f_value;
                report.witness = answer.witness;
            }
            report.answers.push_back(std::move(answer));
        }
        if (!have_k0)
            throw BoundViolationError(
                "min-type scan found no AtMostF answer; k = u(n) must always qualify");
        // A constructive witness can only sharpen the claim.
        if (report.witness && static_cast<long long>(report.witness->size()) < report.claimed_value)
            report.claimed_value = report.witness->size();
    }

    if (with_oracle) {
        try {
            report.exact_opt = adapter.value_oracle(g);
        } catch (const CapExceededError&) {
            report.exact_opt = std::nullopt;
        }
    }
    return report;
}

RatioPrediction predict_ratio(Rational a, Rational c, Rational alpha, Rational beta,
                              Orientation orientation, std::optional<long long> n,
                              std::optional<double> epsilon) {
    if (!(Rational(0) < a) || !(Rational(0) < c)) throw InputError("exponents must be positive");
    RatioPrediction out;
    const Rational d = a * c; // kernel growth after composing the a-factor rules
    const double lambda =
        alpha.value() * std::pow(beta.value(), a.value()); // alpha * beta^a

    if (Rational(1) < d) {
        out.constant_regime = false;
        out.exponent = (d - Rational(1)) / c;
        out.formula = "O(n^(" + out.exponent.str() + "))";
        if (n) out.evaluated_at_n = std::pow(static_cast<double>(*n), out.exponent.value());
        return out;
    }

    out.constant_regime = true;
    if (orientation == Orientation::Max) {
        out.constant = lambda * std::pow(2.0, d.value()) + 3.0;
        out.formula = "alpha*beta^a*2^(a*c) + 3";
        // Linear-kernel vertex specialization: beta*k vertices, a = 1 gives
        // ratio beta + 1 + eps for any eps > 0.
        if (a == Rational(1) && c == Rational(1)) {
            out.constant = beta.value() + 1.0 + epsilon.value_or(0.0);
            out.formula = "beta + 1 + eps";
        }
    } else {
        out.constant = lambda + 1.0;
        out.formula = "alpha*beta^a + 1";
        if (a == Rational(1) && c == Rational(1)) {
            out.constant = beta.value() + 1.0;
            out.formula = "beta + 1";
        }
    }
    return out;
}

} // namespace mmvc
