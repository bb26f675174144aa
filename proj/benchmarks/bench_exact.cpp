#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "stepsched/exact.hpp"

namespace {

void BM_brute_force(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::solve_brute_force(instance));
    }
}
BENCHMARK(BM_brute_force)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_branch_and_bound(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::solve_bnb(instance));
    }
}
BENCHMARK(BM_branch_and_bound)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
