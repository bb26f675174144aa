#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "bench_common.hpp"
#include "stepsched/schedule.hpp"

namespace {

void BM_evaluate(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    std::vector<int> sequence(static_cast<std::size_t>(instance.size()));
    std::iota(sequence.begin(), sequence.end(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::evaluate(instance, sequence));
    }
}
BENCHMARK(BM_evaluate)->Arg(100)->Arg(1000);

void BM_objective_only(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    std::vector<int> sequence(static_cast<std::size_t>(instance.size()));
    std::iota(sequence.begin(), sequence.end(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::objective_of(instance, sequence));
    }
}
BENCHMARK(BM_objective_only)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
