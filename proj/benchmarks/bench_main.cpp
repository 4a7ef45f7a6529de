// Micro benchmarks for the expensive code paths: the exact oracle, the
// class-specific kernels, the homogeneous-set partition, the exact
// independent-set search, and the SAT gadget round trip.  Inputs are seeded
// generator corpora so runs are comparable across machines.

#include <benchmark/benchmark.h>

#include "mmvc/eh.hpp"
#include "mmvc/generators.hpp"
#include "mmvc/graph.hpp"
#include "mmvc/graph_algos.hpp"
#include "mmvc/kernels.hpp"
#include "mmvc/lop.hpp"
#include "mmvc/minimal_cover.hpp"
#include "mmvc/reductions.hpp"

namespace {

using namespace mmvc;

Graph seeded_graph(GraphClass cls, int n, double density, uint64_t seed) {
    GenSpec spec;
    spec.cls = cls;
    spec.n = n;
    spec.edge_density = density;
    spec.seed = seed;
    return generate(spec);
}

void BM_MmvcExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::Any, n, 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(mmvc_exact(g, n));
}
BENCHMARK(BM_MmvcExact)->Arg(14)->Arg(16)->Arg(18);

void BM_KernelTriangleFree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::TriangleFree, n, 0.2, 7);
    const MmvcInstance inst{g, 6};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_hfree(inst, ClassBound::kt(3)));
}
BENCHMARK(BM_KernelTriangleFree)->Arg(40)->Arg(60);

void BM_KernelGeneral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::Any, n, 0.3, 11);
    const MmvcInstance inst{g, 8};
    for (auto _ : state) benchmark::DoNotOptimize(kernel_general(inst));
}
BENCHMARK(BM_KernelGeneral)->Arg(60)->Arg(120);

void BM_EhPartitionRamsey(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::TriangleFree, n, 0.2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(eh_partition(g, Extractor::ramsey(3)));
}
BENCHMARK(BM_EhPartitionRamsey)->Arg(40)->Arg(60);

void BM_EhPartitionOlariu(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::PawFree, n, 0.3, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(eh_partition(g, Extractor::olariu()));
}
BENCHMARK(BM_EhPartitionOlariu)->Arg(40)->Arg(60);

void BM_ExactIndependentSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::Any, n, 0.3, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_independent_set_exact(g, n));
}
BENCHMARK(BM_ExactIndependentSet)->Arg(24)->Arg(28);

void BM_GadgetBuild(benchmark::State& state) {
    const CnfFormula f = generate_monotone_cnf(5, 6, 17);
    for (auto _ : state) benchmark::DoNotOptimize(monotone_to_mmvc(f));
}
BENCHMARK(BM_GadgetBuild);

void BM_GadgetSolveDecode(benchmark::State& state) {
    const CnfFormula f = generate_monotone_cnf(3, 4, 17);
    const MmvcReductionArtifact art = monotone_to_mmvc(f);
    for (auto _ : state) {
        const VertexSet best = mmvc_exact(art.graph, art.graph.vertex_count());
        if (best.size() >= art.k)
            benchmark::DoNotOptimize(decode_assignment(art, f, best));
        else
            benchmark::DoNotOptimize(best.size());
    }
}
BENCHMARK(BM_GadgetSolveDecode);

void BM_ValueApproxMmvc(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = seeded_graph(GraphClass::Any, n, 0.4, 23);
    const MmvcAdapter adapter(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(value_approx(adapter, g, /*with_oracle=*/true));
}
BENCHMARK(BM_ValueApproxMmvc)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();
