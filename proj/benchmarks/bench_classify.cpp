#include <benchmark/benchmark.h>

#include "bitplane_lab/classify.hpp"
#include "synth.hpp"

namespace {

bpl::Dataset wide(std::size_t rows, std::size_t dim) {
  bpl::SplitMix64 rng(rows + dim);
  bpl::Dataset ds;
  for (std::size_t i = 0; i < rows; ++i) {
    const int label = static_cast<int>(rng.below(2));
    bpl::FeatureVector x(dim);
    for (std::size_t f = 0; f < dim; ++f) x[f] = bpl::testing::gaussian(rng) + (f % 7 == 0 ? label : 0);
    ds.add({"r" + std::to_string(i), std::move(x), label});
  }
  return ds;
}

void BM_FitTree(benchmark::State& state) {
  const auto ds = wide(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(bpl::fit_tree(ds));
}
BENCHMARK(BM_FitTree)->Arg(800)->Arg(3200)->Unit(benchmark::kMillisecond);

void BM_FitForest(benchmark::State& state) {
  const auto ds = wide(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bpl::fit_forest(ds));
}
BENCHMARK(BM_FitForest)->Args({800, 6})->Args({800, 1024})->Unit(benchmark::kMillisecond);

}  // namespace
