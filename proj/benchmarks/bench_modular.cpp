#include <benchmark/benchmark.h>

#include <vector>

#include "cyclothue/modular.hpp"

namespace {

void BM_BernoulliTable(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::bernoulli_table_mod_p(p));
}
BENCHMARK(BM_BernoulliTable)->Arg(691)->Arg(9973)->Unit(benchmark::kMillisecond);

void BM_FermatQuotient(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t p : {1093, 3511, 99991}) benchmark::DoNotOptimize(cyclothue::fermat_quotient_int(2, p));
  }
}
BENCHMARK(BM_FermatQuotient);

void BM_Pigeonhole(benchmark::State& state) {
  const std::vector<std::int64_t> a{1, 17, 101};
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::pigeonhole_solve(state.range(0), a));
}
BENCHMARK(BM_Pigeonhole)->Arg(499)->Arg(4999)->Unit(benchmark::kMicrosecond);

}  // namespace
