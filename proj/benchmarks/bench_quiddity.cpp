#include <benchmark/benchmark.h>

#include "quiddity/counting.hpp"
#include "quiddity/irreducible.hpp"

using namespace quid;

static void BM_DpSeries(benchmark::State& state) {
  const Ring ring(RingSpec::zmod(static_cast<std::uint32_t>(state.range(0))));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_count_series(ring, n));
  }
  state.SetLabel(ring.spec().to_string());
}
BENCHMARK(BM_DpSeries)->Args({5, 8})->Args({12, 8})->Args({16, 12})->Unit(benchmark::kMillisecond);

static void BM_DpField(benchmark::State& state) {
  const Ring ring(RingSpec::field(2, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_count_all(ring, 10));
  }
  state.SetLabel(ring.spec().to_string());
}
BENCHMARK(BM_DpField)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_NaiveCount(benchmark::State& state) {
  const Ring ring(RingSpec::zmod(5));
  const Mat2 target = minus_identity(ring);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_count(ring, n, target));
  }
}
BENCHMARK(BM_NaiveCount)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const auto modulus = static_cast<std::uint32_t>(state.range(0));
  const Ring ring(RingSpec::zmod(modulus));
  EnumerateOptions opts;
  opts.max_len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    const auto classes = enumerate_irreducible(ring, opts);
    state.counters["classes"] = static_cast<double>(classes.size());
  }
}
BENCHMARK(BM_Enumerate)
    ->Args({7, 11})
    ->Args({9, 14})
    ->Args({10, 14})
    ->Args({11, 21})
    ->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const Ring ring(RingSpec::zmod(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_irreducible_classes(ring, 8));
  }
}
BENCHMARK(BM_Oracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
