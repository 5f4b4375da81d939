#include <benchmark/benchmark.h>

#include "effvec/column_means.hpp"
#include "effvec/construction.hpp"
#include "effvec/efficiency.hpp"
#include "effvec/experiments.hpp"
#include "effvec/random.hpp"
#include "effvec/spectral.hpp"

using namespace effvec;

namespace {

PCMatrix sample(std::size_t n, std::uint64_t seed = 1) {
  RandomStream s(seed);
  return random_pc_uniform_upper(n, 1.0, 9.0, s);
}

void BM_Sweep(benchmark::State& state) {
  const PCMatrix a = sample(static_cast<std::size_t>(state.range(0)));
  SweepOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_all_subsets(a, opts));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << state.range(0)) - 1));
}
BENCHMARK(BM_Sweep)->Args({5, 1})->Args({8, 1})->Args({12, 1})->Args({12, 4})
    ->Unit(benchmark::kMicrosecond);

void BM_IsEfficient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PCMatrix a = sample(n);
  const PriorityVector w = geometric_mean_all_columns(a);
  for (auto _ : state) benchmark::DoNotOptimize(is_efficient(a, w));
}
BENCHMARK(BM_IsEfficient)->Arg(5)->Arg(12)->Arg(50);

void BM_Perron(benchmark::State& state) {
  const PCMatrix a = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(perron_vector(a));
}
BENCHMARK(BM_Perron)->Arg(5)->Arg(12)->Arg(50);

void BM_Enumerate(benchmark::State& state) {
  const PCMatrix a = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inductive_enumerate(a, {0, 1}));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
