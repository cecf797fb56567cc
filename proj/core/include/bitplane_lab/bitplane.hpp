#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bitplane_lab/image.hpp"

namespace bpl {

/// Set of bit-plane indices in [0, 7], stored as an 8-bit membership word where
/// bit k set means plane k is included.
class PlaneMask {
 public:
  constexpr PlaneMask() = default;
  constexpr explicit PlaneMask(std::uint8_t bits) : bits_(bits) {}
  /// Throws Errc::InvalidParams for an index outside [0, 7] or a repeated index.
  PlaneMask(std::initializer_list<int> planes);

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool contains(int plane) const noexcept {
    return plane >= 0 && plane < 8 && ((bits_ >> plane) & 1U) != 0;
  }
  constexpr PlaneMask complement() const noexcept {
    return PlaneMask(static_cast<std::uint8_t>(~bits_));
  }
  constexpr PlaneMask with(int plane) const noexcept {
    return PlaneMask(static_cast<std::uint8_t>(bits_ | (1U << plane)));
  }
  std::vector<int> indices() const;

  friend constexpr bool operator==(PlaneMask, PlaneMask) = default;

 private:
  std::uint8_t bits_ = 0;
};

namespace masks {
inline constexpr PlaneMask kNone(std::uint8_t{0x00});
inline constexpr PlaneMask kOriginal(std::uint8_t{0xFF});
inline constexpr PlaneMask kMsb4(std::uint8_t{0xF0});
inline constexpr PlaneMask kLsb4(std::uint8_t{0x0F});
inline constexpr PlaneMask kMsb6(std::uint8_t{0xFC});
inline constexpr PlaneMask kLsb2(std::uint8_t{0x03});
}  // namespace masks

/// Eight binary rasters of one image, index 0 = LSB ... 7 = MSB. Entries are 0 or 1.
class BitPlaneStack {
 public:
  static constexpr int kPlanes = 8;

  BitPlaneStack() = default;
  /// All-zero stack.
  BitPlaneStack(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  std::span<const std::uint8_t> plane(int k) const { return planes_.at(k); }
  std::span<std::uint8_t> plane(int k) { return planes_.at(k); }

  bool same_shape(const BitPlaneStack& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const BitPlaneStack&, const BitPlaneStack&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::array<std::vector<std::uint8_t>, kPlanes> planes_;
};

BitPlaneStack slice(const GrayImage& img);

/// Sum of plane_k * 2^k over the planes in mask; positional weights are kept, so
/// MSB4 of 170 is 160 rather than a rescaled value.
GrayImage recompose(const BitPlaneStack& stack, PlaneMask mask);

/// Planes in mask are taken from replacement, all others from stack.
/// Throws Errc::DimensionMismatch when the stacks differ in shape.
BitPlaneStack replace_planes(const BitPlaneStack& stack, PlaneMask mask,
                             const BitPlaneStack& replacement);

/// Plane k as an image with values {0, 1}, or {0, 255} when scaled for display.
GrayImage plane_image(const BitPlaneStack& stack, int k, bool display_scaled = false);

/// Inverse of plane_image: any nonzero pixel becomes 1 in plane k.
/// Throws Errc::DimensionMismatch on shape mismatch.
void set_plane(BitPlaneStack& stack, int k, const GrayImage& binary);

}  // namespace bpl
