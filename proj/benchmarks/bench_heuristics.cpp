#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "stepsched/heuristics.hpp"

namespace {

using stepsched::Algorithm;

void BM_dispatch(benchmark::State& state, Algorithm alg) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    const stepsched::HeuristicConfig config{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::dispatch(instance, alg, config));
    }
}
BENCHMARK_CAPTURE(BM_dispatch, edd, Algorithm::EDD)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_dispatch, wspt, Algorithm::WSPT)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_dispatch, atc, Algorithm::ATC)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_dispatch, ca, Algorithm::CA)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_dispatch, wmdd, Algorithm::WMDD)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_dispatch, mswsp, Algorithm::MSWSP)->Arg(100)->Arg(1000);

void BM_pairwise_swap(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    const stepsched::Schedule seed = stepsched::edd(instance);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            stepsched::pairwise_swap(instance, seed, stepsched::PsMode::single_pass));
    }
}
BENCHMARK(BM_pairwise_swap)->Arg(100)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_ca_ps_full(benchmark::State& state) {
    const stepsched::Instance instance = benchutil::make_instance(static_cast<int>(state.range(0)));
    const stepsched::HeuristicConfig config{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepsched::run_with_ps(instance, Algorithm::CA, config));
    }
}
BENCHMARK(BM_ca_ps_full)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
