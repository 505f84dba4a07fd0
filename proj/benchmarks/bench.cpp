#include <benchmark/benchmark.h>

#include <numeric>

#include "annular/closed_forms.hpp"
#include "annular/forest.hpp"
#include "annular/oracle.hpp"
#include "annular/paired_array.hpp"

namespace {

using namespace annular;

void BM_BruteDistribution(benchmark::State& state) {
  OracleJob job;
  job.p = static_cast<int>(state.range(0));
  job.q = static_cast<int>(state.range(0));
  job.s = std::nullopt;
  job.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(brute_distribution(job));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairing_count(job.p, job.q)));
}
BENCHMARK(BM_BruteDistribution)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_MainSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeriesSpec spec{n, n, n % 2 == 0 ? 2 : 1};
  for (auto _ : state) benchmark::DoNotOptimize(main_series(spec));
}
BENCHMARK(BM_MainSeries)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_SummedSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gs_series(n, n));
}
BENCHMARK(BM_SummedSeries)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_ForestCompletion(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<int> eliminated(static_cast<std::size_t>(k - 1));
  std::iota(eliminated.begin(), eliminated.end(), 1);
  std::vector<int> tuple(eliminated.size());
  for (std::size_t t = 0; t < tuple.size(); ++t) tuple[t] = static_cast<int>((t * 7 + 3) % static_cast<std::size_t>(k)) + 1;
  tuple.back() = k;
  const CompletionInput input{RootedForest(k), eliminated, tuple};
  for (auto _ : state) {
    const auto result = fca_forward(input);
    std::vector<std::pair<int, int>> removals;
    for (int r : eliminated) removals.emplace_back(r, result.forest.parent(r));
    benchmark::DoNotOptimize(fca_inverse(result.forest, removals));
  }
}
BENCHMARK(BM_ForestCompletion)->RangeMultiplier(4)->Range(4, 1024);

void BM_VerticalEnumeration(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertical_arrays(s, 3, 1, 1));
}
BENCHMARK(BM_VerticalEnumeration)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
