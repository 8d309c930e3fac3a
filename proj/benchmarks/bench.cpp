#include <benchmark/benchmark.h>

#include <khoworks/diagram.hpp>
#include <khoworks/homology.hpp>
#include <khoworks/polynomial.hpp>

using namespace khoworks;

static void BM_bracket_torus2(benchmark::State& state) {
    LinkDiagram d = torus2(-(int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_bracket_torus2)->Arg(6)->Arg(10)->Arg(14);

static void BM_khovanov_torus2(benchmark::State& state) {
    LinkDiagram d = torus2(-(int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(khovanov(d));
}
BENCHMARK(BM_khovanov_torus2)->Arg(4)->Arg(6)->Arg(8);

static void BM_khovanov_hopf_chain(benchmark::State& state) {
    LinkDiagram d = hopf_chain((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(khovanov(d));
}
BENCHMARK(BM_khovanov_hopf_chain)->Arg(2)->Arg(3)->Arg(4);

static void BM_khovanov_parallel(benchmark::State& state) {
    LinkDiagram d = torus2(-9);
    HomologyOptions opt;
    opt.jobs = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(khovanov(d, opt));
}
BENCHMARK(BM_khovanov_parallel)->Arg(1)->Arg(2)->Arg(4);

// Smith normal form on the largest differential block of a torus diagram.
static void BM_snf_differential(benchmark::State& state) {
    LinkDiagram d = torus2(-(int)state.range(0));
    Mat64 biggest;
    for (const auto& [ij, states] : chain_groups(d)) {
        IntegerMatrix blk = differential(d, ij.first, ij.second);
        if ((long long)blk.m.rows * blk.m.cols >
            (long long)biggest.rows * biggest.cols)
            biggest = blk.m;
    }
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(biggest));
}
BENCHMARK(BM_snf_differential)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
