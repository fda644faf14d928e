// Serial reference loops (jobs = 1) against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "markov_mmp/conjecture.hpp"
#include "markov_mmp/scan.hpp"

using namespace mm;

static void BM_ConsistencyScan(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(consistency_scan(2000, CheckAll, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ConsistencyScan)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTree(benchmark::State& st) {
    Int bound("1000000000000000000000000000000");
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_tree(bound, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnumerateTree)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FlipScan(benchmark::State& st) {
    auto triples = enumerate_tree(Int("1000000000000"), 1);
    for (auto _ : st) benchmark::DoNotOptimize(flip_scan(triples, 100000, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FlipScan)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
