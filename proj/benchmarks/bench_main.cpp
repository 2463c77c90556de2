#include <benchmark/benchmark.h>

#include "hlcluster/hltable.hpp"
#include "hlcluster/seed.hpp"

using namespace hlc;

namespace {

HeightFunction linear_xi(const DynkinDiagram& d) {
    std::vector<long> xi(d.rank(), 0);
    std::vector<bool> set(d.rank(), false);
    set[0] = true;
    for (auto [a, b] : d.edges()) {
        int u = a, v = b;
        if (!set[u - 1]) std::swap(u, v);
        xi[v - 1] = xi[u - 1] - 1;
        set[v - 1] = true;
    }
    return HeightFunction(d, xi);
}

void BM_QCartanTable(benchmark::State& state) {
    auto d = build_diagram('E', 8);
    for (auto _ : state) {
        QCartanTable t(d);
        benchmark::DoNotOptimize(t.entry(1, 8, 117));
    }
}
BENCHMARK(BM_QCartanTable);

void BM_LMatrix(benchmark::State& state) {
    auto d = build_diagram('E', 8);
    QCartanTable qct(d);
    GridQuiver g(linear_xi(d), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto L = l_matrix(g, qct);
        benchmark::DoNotOptimize(L);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LMatrix)->Arg(1)->Arg(2)->Arg(3);

void BM_MatrixMutationWalk(benchmark::State& state) {
    auto d = build_diagram('E', 8);
    QCartanTable qct(d);
    GridQuiver g(linear_xi(d), 3);
    auto s = seed_matrices(g, qct);
    for (auto _ : state) {
        auto cur = s;
        for (int k = 0; k < cur.B.cols; ++k) cur = mutate(cur, k);
        benchmark::DoNotOptimize(cur);
    }
}
BENCHMARK(BM_MatrixMutationWalk);

void BM_ARQuiverBuild(benchmark::State& state) {
    auto d = build_diagram('E', static_cast<int>(state.range(0)));
    auto xi = linear_xi(d);
    for (auto _ : state) {
        ARQuiver ar(xi);
        benchmark::DoNotOptimize(ar.meshes().size());
    }
}
BENCHMARK(BM_ARQuiverBuild)->Arg(6)->Arg(7)->Arg(8);

void BM_SourceSweep(benchmark::State& state) {
    auto d = build_diagram('E', 6);
    ARQuiver ar(linear_xi(d));
    for (auto _ : state) {
        auto sweep = source_sweep(ar);
        benchmark::DoNotOptimize(sweep.size());
    }
}
BENCHMARK(BM_SourceSweep);

void BM_HlTable(benchmark::State& state) {
    auto d = build_diagram('E', static_cast<int>(state.range(0)));
    auto xi = linear_xi(d);
    for (auto _ : state) {
        ARQuiver ar(xi);
        auto recs = hl_table(ar, false, false);
        benchmark::DoNotOptimize(recs.size());
    }
}
BENCHMARK(BM_HlTable)->Arg(6)->Arg(8);

void BM_GridEnumeration(benchmark::State& state) {
    auto d = build_diagram('A', 2);
    HeightFunction xi(d, {0, -1});
    GridQuiver g(xi, 2);
    for (auto _ : state) {
        auto res = enumerate_bfs(Seed::grid_principal(g), 1000);
        benchmark::DoNotOptimize(res.variables.size());
    }
}
BENCHMARK(BM_GridEnumeration);

}  // namespace

BENCHMARK_MAIN();
