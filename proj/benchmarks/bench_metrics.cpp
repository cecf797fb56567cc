#include <benchmark/benchmark.h>

#include "bitplane_lab/bitplane.hpp"
#include "bitplane_lab/features.hpp"
#include "bitplane_lab/metrics.hpp"
#include "synth.hpp"

namespace {

void BM_SsimSliding(benchmark::State& state) {
  bpl::SplitMix64 rng(1);
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto x = bpl::testing::xray_like(rng, side, 3.0);
  const auto y = bpl::recompose(bpl::slice(x), bpl::masks::kMsb4);
  for (auto _ : state) benchmark::DoNotOptimize(bpl::ssim(x, y));
}
BENCHMARK(BM_SsimSliding)->Arg(64)->Arg(512);

void BM_SsimGlobal(benchmark::State& state) {
  bpl::SplitMix64 rng(2);
  const auto x = bpl::testing::xray_like(rng, 512, 3.0);
  const auto y = bpl::recompose(bpl::slice(x), bpl::masks::kMsb4);
  const bpl::SsimParams p{0.01, 0.03, 255.0, bpl::GlobalWindow{}};
  for (auto _ : state) benchmark::DoNotOptimize(bpl::ssim(x, y, p));
}
BENCHMARK(BM_SsimGlobal);

void BM_SliceRecompose(benchmark::State& state) {
  bpl::SplitMix64 rng(3);
  const auto img = bpl::testing::random_image(rng, 512, 512);
  for (auto _ : state) benchmark::DoNotOptimize(bpl::recompose(bpl::slice(img), bpl::masks::kMsb4));
}
BENCHMARK(BM_SliceRecompose);

void BM_HandcraftedFeatures(benchmark::State& state) {
  bpl::SplitMix64 rng(4);
  const auto img = bpl::testing::xray_like(rng, 512, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(bpl::handcrafted_features(img));
}
BENCHMARK(BM_HandcraftedFeatures);

}  // namespace
