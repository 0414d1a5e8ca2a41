// Microbenchmarks for the narrow-band containers: bulk push/pop throughput,
// decrease-key cost, and a marching-style interleaved workload.

#include <benchmark/benchmark.h>

#include <type_traits>
#include <vector>

#include "eikonal/experiments.hpp"
#include "eikonal/narrow_band.hpp"

using namespace eikonal;

namespace {

std::vector<double> uniform_keys(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> keys(n);
  for (double& k : keys) k = rng.next_unit();
  return keys;
}

template <typename Queue>
Queue make_queue(std::size_t cell_count) {
  if constexpr (std::is_constructible_v<Queue, std::size_t>)
    return Queue(cell_count);
  else
    return Queue();
}

}  // namespace

template <typename Queue>
static void BM_PushPopAll(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> keys = uniform_keys(n, 99);
  for (auto _ : state) {
    Queue q = make_queue<Queue>(n);
    for (std::size_t i = 0; i < n; ++i) q.push(i, keys[i]);
    double sum = 0.0;
    while (!q.empty()) sum += q.pop().key;
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK_TEMPLATE(BM_PushPopAll, BinaryHeap)->Range(1 << 10, 1 << 16);
BENCHMARK_TEMPLATE(BM_PushPopAll, FibonacciHeap)->Range(1 << 10, 1 << 16);
BENCHMARK_TEMPLATE(BM_PushPopAll, StaleQueue)->Range(1 << 10, 1 << 16);
BENCHMARK_TEMPLATE(BM_PushPopAll, UntidyQueue)->Range(1 << 10, 1 << 16);

template <typename Queue>
static void BM_DecreaseKey(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> keys = uniform_keys(n, 7);
  for (auto _ : state) {
    Queue q = make_queue<Queue>(n);
    for (std::size_t i = 0; i < n; ++i) q.push(i, 1.0 + keys[i]);
    for (std::size_t i = 0; i < n; ++i) q.decrease(i, keys[i]);
    double sum = 0.0;
    while (!q.empty()) sum += q.pop().key;
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK_TEMPLATE(BM_DecreaseKey, BinaryHeap)->Range(1 << 10, 1 << 16);
BENCHMARK_TEMPLATE(BM_DecreaseKey, FibonacciHeap)->Range(1 << 10, 1 << 16);

/// Marching-style load: a steady working set where every pop admits a new
/// cell slightly ahead of the front, like a narrow band crossing a grid.
template <typename Queue>
static void BM_FrontInterleave(benchmark::State& state) {
  const std::size_t band = static_cast<std::size_t>(state.range(0));
  const std::size_t steps = 1 << 16;
  const std::vector<double> jitter = uniform_keys(steps + band, 3);
  for (auto _ : state) {
    Queue q = make_queue<Queue>(band + steps);
    for (std::size_t i = 0; i < band; ++i) q.push(i, jitter[i] * 0.01);
    double sum = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      const KeyedEntry e = q.pop();
      sum += e.key;
      q.push(band + s, e.key + 0.01 * jitter[band + s]);
    }
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(steps));
}
BENCHMARK_TEMPLATE(BM_FrontInterleave, BinaryHeap)->Arg(1 << 8)->Arg(1 << 12);
BENCHMARK_TEMPLATE(BM_FrontInterleave, FibonacciHeap)->Arg(1 << 8)->Arg(1 << 12);
BENCHMARK_TEMPLATE(BM_FrontInterleave, StaleQueue)->Arg(1 << 8)->Arg(1 << 12);
BENCHMARK_TEMPLATE(BM_FrontInterleave, UntidyQueue)->Arg(1 << 8)->Arg(1 << 12);

BENCHMARK_MAIN();
