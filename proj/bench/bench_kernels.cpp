#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gbent/gbf.hpp"
#include "gbent/kernels.hpp"

namespace {

std::vector<std::int64_t> signs(int n) {
  std::mt19937_64 rng(42);
  std::vector<std::int64_t> v(std::size_t{1} << n);
  for (auto& x : v) x = (rng() & 1U) ? -1 : 1;
  return v;
}

gbent::Gbf random_gbf(int n, int k) {
  std::mt19937_64 rng(7);
  return gbent::Gbf::from_function(n, k, [&](std::uint64_t) { return rng() & ((1U << k) - 1); });
}

void BM_fwht_serial(benchmark::State& state) {
  const auto input = signs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto data = input;
    gbent::kernels::fwht_serial(data);
    benchmark::DoNotOptimize(data.data());
  }
}

void BM_fwht_parallel(benchmark::State& state) {
  const auto input = signs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto data = input;
    gbent::kernels::fwht_parallel(data);
    benchmark::DoNotOptimize(data.data());
  }
}

void BM_gwht(benchmark::State& state, gbent::Schedule schedule) {
  const auto f = random_gbf(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto h = gbent::gwht(f, schedule);
    benchmark::DoNotOptimize(h.flat().data());
  }
}

}  // namespace

BENCHMARK(BM_fwht_serial)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fwht_parallel)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gwht, serial, gbent::Schedule::Serial)->Args({12, 3})->Args({16, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gwht, parallel, gbent::Schedule::Parallel)->Args({12, 3})->Args({16, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
