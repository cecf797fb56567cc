#include <gtest/gtest.h>

#include <cstdlib>

#include "bitplane_lab/bitplane.hpp"
#include "bitplane_lab/denoise.hpp"
#include "bitplane_lab/metrics.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "synth.hpp"

namespace bpl {
namespace {

using testing::thrown_code;

void expect_within_one(const GrayImage& got, const GrayImage& want) {
  ASSERT_TRUE(got.same_shape(want));
  for (std::size_t i = 0; i < got.size(); ++i) {
    ASSERT_LE(std::abs(got.pixels()[i] - want.pixels()[i]), 1) << "pixel " << i;
  }
}

TEST(NlmParams, Validation) {
  EXPECT_EQ(thrown_code([] { NlmParams{0.0, 3, 10}.validate(); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { NlmParams{10.0, 0, 10}.validate(); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { NlmParams{10.0, 3, 2}.validate(); }), Errc::InvalidParams);
  EXPECT_FALSE(thrown_code([] { NlmParams{}.validate(); }));
}

TEST(Nlm, ConstantImagesAreFixedPoints) {
  for (const int v : {0, 1, 128, 255}) {
    for (const NlmParams p : {NlmParams{}, NlmParams{1.0, 1, 1}, NlmParams{50.0, 2, 5}}) {
      const GrayImage img(13, 7, static_cast<std::uint8_t>(v));
      EXPECT_EQ(nlm_denoise(img, p), img);
    }
  }
}

TEST(Nlm, ImpulseIsAttenuatedWithWiderPatches) {
  GrayImage img(9, 9, 0);
  img.at(4, 4) = 255;
  const NlmParams p{10.0, 4, 10};
  const GrayImage out = nlm_denoise(img, p);
  EXPECT_LT(out.at(4, 4), 255);
  const double oracle = testing::brute_force_nlm(img, p)[4 * 9 + 4];
  EXPECT_NEAR(oracle, 228.0, 1.0);
  expect_within_one(out, testing::brute_force_nlm_rounded(img, p));
}

TEST(Nlm, ImpulseWithDefaultParamsMatchesOracle) {
  GrayImage img(9, 9, 0);
  img.at(4, 4) = 255;
  const double oracle = testing::brute_force_nlm(img, {})[4 * 9 + 4];
  EXPECT_LT(oracle, 255.0);
  EXPECT_GT(oracle, 254.5);
  expect_within_one(nlm_denoise(img, {}), testing::brute_force_nlm_rounded(img, {}));
}

TEST(Nlm, MatchesBruteForceOn15x15) {
  SplitMix64 rng(15);
  for (int i = 0; i < 5; ++i) {
    const GrayImage img = testing::random_image(rng, 15, 15);
    const NlmParams p{10.0, 3, 3};
    expect_within_one(nlm_denoise(img, p), testing::brute_force_nlm_rounded(img, p));
  }
}

TEST(Nlm, MatchesBruteForceOnSmoothImagesAcrossStrengths) {
  SplitMix64 rng(16);
  for (const double h : {3.0, 10.0, 40.0}) {
    const GrayImage img = testing::xray_like(rng, 18, 4.0);
    const NlmParams p{h, 2, 4};
    expect_within_one(nlm_denoise(img, p), testing::brute_force_nlm_rounded(img, p));
  }
}

TEST(Nlm, IndependentOfThreadCount) {
  SplitMix64 rng(17);
  const GrayImage img = testing::xray_like(rng, 40, 5.0);
  ::setenv("BITPLANE_LAB_THREADS", "1", 1);
  const GrayImage serial = nlm_denoise(img, {});
  ::setenv("BITPLANE_LAB_THREADS", "4", 1);
  const GrayImage threaded = nlm_denoise(img, {});
  ::unsetenv("BITPLANE_LAB_THREADS");
  EXPECT_EQ(serial, threaded);
}

TEST(DenoiseFull, EqualsNlm) {
  SplitMix64 rng(18);
  const GrayImage img = testing::xray_like(rng, 24, 3.0);
  EXPECT_EQ(denoise_full(img), nlm_denoise(img));
}

TEST(DenoiseFull, SaltAndPepperGradientGainsSnr) {
  GrayImage clean(32, 32);
  for (std::size_t y = 0; y < 32; ++y) {
    for (std::size_t x = 0; x < 32; ++x) clean.at(x, y) = static_cast<std::uint8_t>(60 + 3 * x + y);
  }
  GrayImage noisy = clean;
  SplitMix64 rng(19);
  for (auto& p : noisy.pixels()) {
    const auto r = rng.below(100);
    if (r < 3) p = 0;
    if (r >= 97) p = 255;
  }
  const NlmParams p{40.0, 1, 5};
  EXPECT_GT(snr_db(clean, denoise_full(noisy, p)), snr_db(clean, noisy));
}

TEST(DenoisePartial, PreservesUpperSixPlanes) {
  SplitMix64 rng(20);
  for (int i = 0; i < 100; ++i) {
    const GrayImage img = testing::random_image(rng, 20);
    const GrayImage out = denoise_partial(img);
    ASSERT_EQ(recompose(slice(out), masks::kMsb6), recompose(slice(img), masks::kMsb6));
  }
}

TEST(DenoisePartial, ConstantLowPlanesAreUntouched) {
  SplitMix64 rng(21);
  GrayImage img = testing::random_image(rng, 16, 16);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>((p & 0xFC) | 0x2);
  EXPECT_EQ(denoise_partial(img), img);
}

TEST(DenoisePartial, IsolatedFlipsInPlaneZeroAreRemoved) {
  GrayImage img(24, 24, 100);
  for (const auto [x, y] : {std::pair{3, 4}, {12, 12}, {20, 7}, {6, 19}}) img.at(x, y) = 101;
  const GrayImage out = denoise_partial(img);
  EXPECT_EQ(out, GrayImage(24, 24, 100));
}

TEST(DenoisePartial, PlanesFollowBruteForceNlmOnBinaryRaster) {
  SplitMix64 rng(22);
  const GrayImage img = testing::xray_like(rng, 20, 3.0);
  const NlmParams p{0.5, 1, 3};
  const auto in = slice(img);
  const auto out = slice(denoise_partial(img, p));
  for (const int k : {0, 1}) {
    EXPECT_EQ(plane_image(out, k), testing::brute_force_nlm_rounded(plane_image(in, k), p)) << k;
  }
}

}  // namespace
}  // namespace bpl
