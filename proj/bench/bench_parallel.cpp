#include <benchmark/benchmark.h>

#include "hodgelab/derhamring.hpp"
#include "hodgelab/fuzz.hpp"
#include "hodgelab/hdrring.hpp"
#include "hodgelab/hodgering.hpp"

using namespace hodgelab;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_verify_presentation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(10, mode(state)).passed());
}

void BM_verify_hodge_congruences(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_hodge_congruences(8, {2, 3, 4, 5, 6, 9}, mode(state)).passed());
}

void BM_verify_derham(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_derham(12, mode(state)).passed());
}

void BM_tau_surjective(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_tau_surjective(6, mode(state)).passed());
}

void BM_round_trip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(round_trip_batch(8, 500, 1, 9, mode(state)).passed());
}

void BM_algebraic_laws(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_laws(4000, 1, mode(state)).passed());
}

}  // namespace

#define HODGELAB_BENCH(fn) BENCHMARK(fn)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime()

HODGELAB_BENCH(BM_verify_presentation);
HODGELAB_BENCH(BM_verify_hodge_congruences);
HODGELAB_BENCH(BM_verify_derham);
HODGELAB_BENCH(BM_tau_surjective);
HODGELAB_BENCH(BM_round_trip);
HODGELAB_BENCH(BM_algebraic_laws);

BENCHMARK_MAIN();
