// Bitset/OpenMP kernels against the serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "c4ramsey/construct.hpp"
#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

using namespace c4r;

namespace {

Coloring random_coloring(int parts, int part_size, int k) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(parts * 1000 + part_size));
  Coloring c(PartitionSpec{parts, part_size}, k);
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    c.set_edge_color(e, static_cast<Color>(rng() % static_cast<std::uint64_t>(k) + 1));
  return c;
}

Coloring input(const benchmark::State& state) {
  if (state.range(0) == 0) return fig1_coloring();
  return random_coloring(3, static_cast<int>(state.range(0)), 4);
}

void BM_CountReference(benchmark::State& state) {
  const Coloring c = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_mono_c4_serial(c));
}

void BM_CountBitset(benchmark::State& state) {
  const Coloring c = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(count_mono_c4(c));
}

void BM_FindReference(benchmark::State& state) {
  const Coloring c = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::find_mono_c4_serial(c));
}

void BM_FindBitset(benchmark::State& state) {
  const Coloring c = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(find_mono_c4(c));
}

// Range 0 is the bundled K_10^3 coloring, the rest are random 4-colorings of K_n^3.
#define C4R_SIZES ->Arg(0)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond)
BENCHMARK(BM_CountReference) C4R_SIZES;
BENCHMARK(BM_CountBitset) C4R_SIZES;
BENCHMARK(BM_FindReference) C4R_SIZES;
BENCHMARK(BM_FindBitset) C4R_SIZES;

void BM_ExhaustiveSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::exhaustive_search_serial({4, 2}, 2).stats.nodes);
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search({4, 2}, 2).stats.nodes);
}

BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
