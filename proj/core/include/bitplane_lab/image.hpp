#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace bpl {

/// 8-bit single-channel raster, row-major, top-left origin.
class GrayImage {
 public:
  GrayImage() = default;

  /// Zero-filled image. Throws Errc::InvalidParams when either side is 0.
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  /// Throws Errc::InvalidParams on zero sides or Errc::DimensionMismatch when
  /// pixels.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }
  std::span<const std::uint8_t> row(std::size_t y) const noexcept {
    return std::span(pixels_).subspan(y * width_, width_);
  }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Reads a binary PGM (P5, maxval 255) or an 8-bit grayscale PNG. Multi-channel,
/// palette and 16-bit inputs are rejected rather than converted.
GrayImage load_image(const std::filesystem::path& path);

/// Writes binary PGM: "P5\n<w> <h>\n255\n" followed by the raw bytes.
void save_image(const GrayImage& img, const std::filesystem::path& path);

/// PGM codec on in-memory buffers; load_image/save_image are thin wrappers.
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

}  // namespace bpl
