#include <gtest/gtest.h>

#include "bitplane_lab/bitplane.hpp"
#include "errors.hpp"
#include "synth.hpp"

namespace bpl {
namespace {

using testing::thrown_code;

std::vector<int> planes_of(const BitPlaneStack& s) {
  std::vector<int> bits;
  for (int k = 0; k < 8; ++k) bits.push_back(s.plane(k)[0]);
  return bits;
}

TEST(Slice, BinaryExpansionOf170) {
  EXPECT_EQ(planes_of(slice(GrayImage(1, 1, 170))), (std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1}));
}

TEST(Slice, ExtremesAreAllZeroOrAllOne) {
  EXPECT_EQ(planes_of(slice(GrayImage(1, 1, 0))), std::vector<int>(8, 0));
  EXPECT_EQ(planes_of(slice(GrayImage(1, 1, 255))), std::vector<int>(8, 1));
}

TEST(Recompose, MaskExamplesOn170) {
  const auto s = slice(GrayImage(1, 1, 170));
  EXPECT_EQ(recompose(s, masks::kMsb4).at(0, 0), 160);
  EXPECT_EQ(recompose(s, masks::kLsb4).at(0, 0), 10);
  EXPECT_EQ(recompose(s, masks::kNone), GrayImage(1, 1, 0));
}

TEST(Recompose, RoundtripAndPartitionOnRandomImages) {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const GrayImage img = testing::random_image(rng, 24);
    const auto s = slice(img);
    ASSERT_EQ(recompose(s, masks::kOriginal), img);
    const GrayImage hi = recompose(s, masks::kMsb4);
    const GrayImage lo = recompose(s, masks::kLsb4);
    for (std::size_t p = 0; p < img.size(); ++p) {
      ASSERT_EQ(hi.pixels()[p] + lo.pixels()[p], img.pixels()[p]);
    }
  }
}

TEST(Recompose, ComplementPartitionForEveryMask) {
  SplitMix64 rng(5);
  const GrayImage img = testing::random_image(rng, 9, 7);
  const auto s = slice(img);
  for (int bits = 0; bits < 256; ++bits) {
    const PlaneMask m(static_cast<std::uint8_t>(bits));
    const GrayImage a = recompose(s, m);
    const GrayImage b = recompose(s, m.complement());
    for (std::size_t p = 0; p < img.size(); ++p) {
      ASSERT_EQ(a.pixels()[p] + b.pixels()[p], img.pixels()[p]) << "mask " << bits;
    }
  }
}

TEST(Recompose, AddingAPlaneNeverDecreasesPixels) {
  SplitMix64 rng(8);
  const GrayImage img = testing::random_image(rng, 12, 12);
  const auto s = slice(img);
  for (int bits = 0; bits < 256; ++bits) {
    const PlaneMask m(static_cast<std::uint8_t>(bits));
    const GrayImage base = recompose(s, m);
    for (int k = 0; k < 8; ++k) {
      const GrayImage more = recompose(s, m.with(k));
      for (std::size_t p = 0; p < img.size(); ++p) ASSERT_GE(more.pixels()[p], base.pixels()[p]);
    }
  }
}

TEST(ReplacePlanes, EmptyAndFullMasks) {
  SplitMix64 rng(9);
  const auto a = slice(testing::random_image(rng, 6, 5));
  const auto b = slice(testing::random_image(rng, 6, 5));
  EXPECT_EQ(replace_planes(a, masks::kNone, b), a);
  EXPECT_EQ(replace_planes(a, masks::kOriginal, b), b);
}

TEST(ReplacePlanes, ZeroingLsb2Of255Gives252) {
  const auto s = slice(GrayImage(1, 1, 255));
  const auto out = replace_planes(s, masks::kLsb2, BitPlaneStack(1, 1));
  EXPECT_EQ(recompose(out, masks::kOriginal).at(0, 0), 252);
}

TEST(ReplacePlanes, ShapeMismatchThrows) {
  EXPECT_EQ(thrown_code([] { replace_planes(BitPlaneStack(2, 2), masks::kLsb2, BitPlaneStack(2, 3)); }),
            Errc::DimensionMismatch);
}

TEST(PlaneMask, InitializerListValidation) {
  EXPECT_EQ(PlaneMask({0, 1}), masks::kLsb2);
  EXPECT_EQ(PlaneMask({4, 5, 6, 7}), masks::kMsb4);
  EXPECT_EQ(thrown_code([] { PlaneMask({8}); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { PlaneMask({-1}); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { PlaneMask({2, 2}); }), Errc::InvalidParams);
  EXPECT_EQ(masks::kMsb6.indices(), (std::vector<int>{2, 3, 4, 5, 6, 7}));
}

TEST(PlaneImage, DisplayScalingAndInverse) {
  const GrayImage img(2, 1, {1, 2});
  auto s = slice(img);
  EXPECT_EQ(plane_image(s, 0), GrayImage(2, 1, {1, 0}));
  EXPECT_EQ(plane_image(s, 1, true), GrayImage(2, 1, {0, 255}));
  set_plane(s, 7, GrayImage(2, 1, {0, 9}));
  EXPECT_EQ(recompose(s, masks::kOriginal), GrayImage(2, 1, {1, 130}));
  EXPECT_EQ(thrown_code([&] { set_plane(s, 0, GrayImage(1, 1)); }), Errc::DimensionMismatch);
}

}  // namespace
}  // namespace bpl
