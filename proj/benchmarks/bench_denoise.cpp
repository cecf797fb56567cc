#include <benchmark/benchmark.h>

#include "bitplane_lab/denoise.hpp"
#include "oracles.hpp"
#include "synth.hpp"

namespace {

bpl::GrayImage sample(std::size_t side) {
  bpl::SplitMix64 rng(side);
  return bpl::testing::xray_like(rng, side, 4.0);
}

void BM_NlmOptimized(benchmark::State& state) {
  const auto img = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpl::nlm_denoise(img));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_NlmOptimized)->Arg(20)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_NlmBruteForce(benchmark::State& state) {
  const auto img = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpl::testing::brute_force_nlm(img, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_NlmBruteForce)->Arg(20)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DenoisePartial(benchmark::State& state) {
  const auto img = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpl::denoise_partial(img));
}
BENCHMARK(BM_DenoisePartial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
