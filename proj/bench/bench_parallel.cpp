// Serial reference vs OpenMP kernels for the alpha sweep and the trace.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "ptqm/brachistochrone.hpp"
#include "ptqm/evolution.hpp"
#include "ptqm/inner_product.hpp"

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ptqm::equivalence_sweep_serial(ptqm::kDefaultSweepMin, 0.0, steps, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptqm::equivalence_sweep(ptqm::kDefaultSweepMin, 0.0, steps, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

const ptqm::PTParams kTraceParams{1.0, 2.0, -0.6};

ptqm::CVec2 trace_start() {
  return ptqm::cpt_normalize({1.0, 0.0}, ptqm::make_operator_set(kTraceParams));
}

void BM_TraceSerial(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const ptqm::CVec2 s0 = trace_start();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptqm::trace_evolution_serial(kTraceParams, s0, 100.0, steps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceParallel(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const ptqm::CVec2 s0 = trace_start();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptqm::trace_evolution(kTraceParams, s0, 100.0, steps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(151)->Arg(10000)->Arg(200000);
BENCHMARK(BM_SweepParallel)->Arg(151)->Arg(10000)->Arg(200000);
BENCHMARK(BM_TraceSerial)->Arg(101)->Arg(10000)->Arg(1000000);
BENCHMARK(BM_TraceParallel)->Arg(101)->Arg(10000)->Arg(1000000);

BENCHMARK_MAIN();
