#include <benchmark/benchmark.h>

#include "mombin/mom.hpp"

using namespace mombin;

namespace {

const Dataset& reference() {
  static const Dataset d = load_dataset(MOMBIN_REFERENCE_DATA);
  return d;
}

void BM_BuildInventory(benchmark::State& state) {
  const RegionOptions opts{static_cast<int>(state.range(0)), std::nullopt, false};
  for (auto _ : state) {
    Inventory inv = build_inventory(reference(), opts);
    benchmark::DoNotOptimize(inv.cells.data());
    state.counters["shapes"] = static_cast<double>(inv.cells.size());
  }
}
BENCHMARK(BM_BuildInventory)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ClassifyAll(benchmark::State& state) {
  const Inventory inv = build_inventory(reference(), RegionOptions{6, std::nullopt, false});
  for (auto _ : state) {
    auto classes = classify_all(inv.cells, reference());
    benchmark::DoNotOptimize(classes.data());
  }
}
BENCHMARK(BM_ClassifyAll)->Unit(benchmark::kMillisecond);

void BM_Sampling(benchmark::State& state) {
  const Inventory inv = build_inventory(reference(), RegionOptions{6, std::nullopt, false});
  for (auto _ : state) {
    SamplingReport rep = sample_inventory(inv, reference(), static_cast<std::size_t>(state.range(0)), 1);
    benchmark::DoNotOptimize(rep.mismatches);
  }
}
BENCHMARK(BM_Sampling)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
