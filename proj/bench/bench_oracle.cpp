// Serial reference kernel vs the OpenMP kernel of the Brauer oracle, plus the
// rewrite engine on the same inputs for scale.

#include <benchmark/benchmark.h>

#include "swl/brauer.hpp"
#include "swl/groth.hpp"

using namespace swl;

namespace {

void table_build(benchmark::State& state, Exec exec) {
  const int p = static_cast<int>(state.range(0));
  const int f = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BrauerTable t(p, f, exec);
    benchmark::DoNotOptimize(t.class_count());
  }
}

void decompose(benchmark::State& state, Exec exec) {
  const int p = static_cast<int>(state.range(0));
  const int f = static_cast<int>(state.range(1));
  auto table = BrauerTable::get(p, f, 10'000);
  PlaceSymbol sym{0, std::vector<std::int64_t>(static_cast<std::size_t>(f), 3 * p - 1)};
  for (auto _ : state) benchmark::DoNotOptimize(table->decompose(sym, exec));
}

void rewrite(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int f = static_cast<int>(state.range(1));
  PlaceStructure s(p, {f});
  std::vector<std::int64_t> k(static_cast<std::size_t>(f), 3 * p + 1);
  auto sym = SymbolicClass::from_weight(s, Weight{k, std::vector<std::int64_t>(k.size(), 0)});
  for (auto _ : state) benchmark::DoNotOptimize(reduce(sym));
}

}  // namespace

BENCHMARK_CAPTURE(table_build, serial, Exec::serial)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(table_build, parallel, Exec::parallel)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decompose, serial, Exec::serial)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(decompose, parallel, Exec::parallel)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMicrosecond);
BENCHMARK(rewrite)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
