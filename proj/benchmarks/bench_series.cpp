#include <benchmark/benchmark.h>

#include "cyclothue/series.hpp"
#include "cyclothue/stickelberger.hpp"

namespace {

void BM_SeriesExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto theta = cyclothue::fueter(n, 1) + cyclothue::fueter(n, 2).act(2);
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::series_expand(theta, 6));
}
BENCHMARK(BM_SeriesExpand)->Arg(7)->Arg(13)->Arg(31)->Unit(benchmark::kMicrosecond);

void BM_Cancellation(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto theta = cyclothue::lemma_simple_search(13)->theta;
  std::vector<std::int64_t> J;
  for (std::int64_t c = 1; static_cast<int>(J.size()) < N; ++c) J.push_back(c);
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::cancellation_solve(theta, J));
}
BENCHMARK(BM_Cancellation)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GaloisPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto theta = cyclothue::fueter(n, 3) + cyclothue::fueter(n, 5);
  const auto lam = cyclothue::CycInt::lambda(n);
  for (auto _ : state) benchmark::DoNotOptimize(cyclothue::galois_pow(lam, 2 * theta));
}
BENCHMARK(BM_GaloisPower)->Arg(11)->Arg(31)->Unit(benchmark::kMicrosecond);

}  // namespace
