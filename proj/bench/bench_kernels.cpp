// Kernels on long linear phenylenes. The serial references are the plain
// algorithms kept for testing (full BFS rows for W_p); the Threads1 variants
// run the OpenMP kernel pinned to one thread for a like-for-like comparison.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <map>

#include "wpi/cycles.hpp"
#include "wpi/extremal.hpp"
#include "wpi/indices.hpp"

namespace {

const wpi::Graph& chain(int h) {
  static std::map<int, wpi::Graph> cache;
  auto it = cache.find(h);
  if (it == cache.end()) it = cache.emplace(h, wpi::linear_chain(h, wpi::SystemKind::phenylene).graph).first;
  return it->second;
}

void BM_OracleSerial(benchmark::State& st) {
  const auto& g = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(wpi::serial::wiener_polarity_oracle(g));
  st.counters["vertices"] = g.order();
}

void BM_OracleParallel(benchmark::State& st) {
  const auto& g = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(wpi::wiener_polarity_oracle(g));
  st.counters["vertices"] = g.order();
  st.counters["threads"] = omp_get_max_threads();
}

void BM_OracleThreads1(benchmark::State& st) {
  const auto& g = chain(static_cast<int>(st.range(0)));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : st) benchmark::DoNotOptimize(wpi::wiener_polarity_oracle(g));
  omp_set_num_threads(saved);
}

void BM_CyclesSerial(benchmark::State& st) {
  const auto& g = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(wpi::serial::enumerate_cycles(g, 6));
}

void BM_CyclesParallel(benchmark::State& st) {
  const auto& g = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(wpi::enumerate_cycles(g, 6));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_Enumerate(benchmark::State& st) {
  const int h = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(wpi::enumerate_catafused(h, wpi::SystemKind::benzenoid));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleThreads1)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CyclesSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclesParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Enumerate)->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
