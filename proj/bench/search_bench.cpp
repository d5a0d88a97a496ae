// Serial reference against the OpenMP split on the current-graph search.

#include <benchmark/benchmark.h>

#include "quadsurf/current_search.hpp"

namespace {

constexpr std::uint64_t kBudget = 100'000'000;

void BM_SearchSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = quadsurf::search_current_graphs_serial(n, kBudget);
    benchmark::DoNotOptimize(r.nodes);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}

void BM_SearchParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto r = quadsurf::search_current_graphs(n, kBudget, threads);
    benchmark::DoNotOptimize(r.nodes);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(11)->Arg(17)->Arg(19)->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)
    ->ArgsProduct({{11, 17, 19, 21}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
