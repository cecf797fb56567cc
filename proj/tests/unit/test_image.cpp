#include <gtest/gtest.h>

#include <fstream>

#include "bitplane_lab/error.hpp"
#include "bitplane_lab/image.hpp"
#include "errors.hpp"
#include "synth.hpp"

namespace bpl {
namespace {

using testing::TempDir;
using testing::thrown_code;

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

TEST(GrayImage, RejectsZeroSidesAndWrongPixelCount) {
  EXPECT_EQ(thrown_code([] { GrayImage(0, 3); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { GrayImage(2, 2, std::vector<std::uint8_t>(3)); }), Errc::DimensionMismatch);
}

TEST(Pgm, DecodesTwoByTwoPayload) {
  auto bytes = bytes_of("P5\n2 2\n255\n");
  for (int v : {0, 85, 170, 255}) bytes.push_back(static_cast<std::uint8_t>(v));
  const GrayImage img = decode_pgm(bytes);
  EXPECT_EQ(img, GrayImage(2, 2, {0, 85, 170, 255}));
}

TEST(Pgm, HeaderCommentsAndWhitespace) {
  auto bytes = bytes_of("P5 # comment\n 3\t1 # w h\n255\n");
  for (int v : {7, 8, 9}) bytes.push_back(static_cast<std::uint8_t>(v));
  EXPECT_EQ(decode_pgm(bytes), GrayImage(3, 1, {7, 8, 9}));
}

TEST(Pgm, RasterMayStartWithWhitespaceByte) {
  auto bytes = bytes_of("P5\n2 1\n255\n");
  bytes.push_back(' ');
  bytes.push_back('\n');
  EXPECT_EQ(decode_pgm(bytes), GrayImage(2, 1, {32, 10}));
}

TEST(Pgm, SixteenBitMaxvalIsUnsupported) {
  auto bytes = bytes_of("P5\n1 1\n65535\n");
  bytes.insert(bytes.end(), {0, 0});
  EXPECT_EQ(thrown_code([&] { decode_pgm(bytes); }), Errc::UnsupportedFormat);
}

TEST(Pgm, OtherMagicIsUnsupported) {
  EXPECT_EQ(thrown_code([] { decode_pgm(bytes_of("P2\n1 1\n255\n0\n")); }), Errc::UnsupportedFormat);
  EXPECT_EQ(thrown_code([] { decode_pgm(bytes_of("P6\n1 1\n255\n\x01\x02\x03")); }),
            Errc::UnsupportedFormat);
}

TEST(Pgm, TruncatedRasterIsCorrupt) {
  EXPECT_EQ(thrown_code([] { decode_pgm(bytes_of("P5\n2 2\n255\n\x01\x02")); }), Errc::CorruptData);
  EXPECT_EQ(thrown_code([] { decode_pgm(bytes_of("P5\n2")); }), Errc::CorruptData);
}

TEST(Pgm, SinglePixelEncoding) {
  const auto bytes = encode_pgm(GrayImage(1, 1, {0}));
  const auto expected = bytes_of(std::string("P5\n1 1\n255\n") + '\0');
  EXPECT_EQ(bytes, expected);
  EXPECT_EQ(bytes.size(), 12U);
}

TEST(ImageFile, SaveLoadRoundtrip) {
  TempDir dir("image_roundtrip");
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GrayImage img = testing::random_image(rng, 40);
    const auto path = dir / ("img" + std::to_string(i) + ".pgm");
    save_image(img, path);
    ASSERT_EQ(load_image(path), img) << "image " << i;
  }
}

TEST(ImageFile, WriteIntoMissingDirectoryIsIoError) {
  TempDir dir("image_missing");
  EXPECT_EQ(thrown_code([&] { save_image(GrayImage(1, 1), dir / "no/such/dir/x.pgm"); }), Errc::IoError);
}

TEST(ImageFile, MissingFileIsNotFound) {
  EXPECT_EQ(thrown_code([] { load_image("/nonexistent/definitely/missing.pgm"); }), Errc::FileNotFound);
}

TEST(ImageFile, UnknownFormatIsUnsupported) {
  TempDir dir("image_unknown");
  std::ofstream(dir / "x.bin") << "GIF89a";
  EXPECT_EQ(thrown_code([&] { load_image(dir / "x.bin"); }), Errc::UnsupportedFormat);
}

const std::filesystem::path kFixtures = BITPLANE_LAB_FIXTURES;

TEST(Png, EightBitGrayLoads) {
  EXPECT_EQ(load_image(kFixtures / "gray8_2x3.png"), GrayImage(2, 3, {0, 85, 170, 255, 1, 2}));
}

TEST(Png, MultiChannelAndWideInputsAreRejected) {
  EXPECT_EQ(thrown_code([] { load_image(kFixtures / "rgb_2x3.png"); }), Errc::UnsupportedFormat);
  EXPECT_EQ(thrown_code([] { load_image(kFixtures / "gray16_2x3.png"); }), Errc::UnsupportedFormat);
  EXPECT_EQ(thrown_code([] { load_image(kFixtures / "palette_2x3.png"); }), Errc::UnsupportedFormat);
}

TEST(Png, TruncatedFileIsCorrupt) {
  TempDir dir("png_trunc");
  const std::string full = testing::read_file(kFixtures / "gray8_2x3.png");
  std::ofstream(dir / "t.png", std::ios::binary) << full.substr(0, full.size() - 20);
  EXPECT_EQ(thrown_code([&] { load_image(dir / "t.png"); }), Errc::CorruptData);
}

}  // namespace
}  // namespace bpl
