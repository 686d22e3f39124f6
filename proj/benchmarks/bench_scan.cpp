#include <benchmark/benchmark.h>

#include "cyclothue/equation.hpp"

namespace {

void BM_Scan(benchmark::State& state) {
  cyclothue::ScanParams p;
  p.b_max = state.range(0);
  p.n_values = {3, 5, 7, 11, 13};
  p.x_max = 10000;
  p.require_nosplit = true;
  p.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::scan(p));
  state.SetItemsProcessed(state.iterations() * p.b_max);
}
BENCHMARK(BM_Scan)->Args({50, 1})->Args({200, 1})->Args({200, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t B = 2; B <= 50; ++B) {
      for (std::int64_t n = 2; n <= 100; ++n) benchmark::DoNotOptimize(cyclothue::classify_exponent(B, n));
    }
  }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace
