#include "bitplane_lab/bitplane.hpp"

#include <algorithm>
#include <string>

#include "bitplane_lab/error.hpp"

namespace bpl {

PlaneMask::PlaneMask(std::initializer_list<int> planes) {
  for (const int k : planes) {
    if (k < 0 || k > 7) {
      throw Error(Errc::InvalidParams, "plane index " + std::to_string(k) + " outside [0, 7]");
    }
    if (contains(k)) {
      throw Error(Errc::InvalidParams, "plane index " + std::to_string(k) + " repeated");
    }
    bits_ = static_cast<std::uint8_t>(bits_ | (1U << k));
  }
}

std::vector<int> PlaneMask::indices() const {
  std::vector<int> out;
  for (int k = 0; k < 8; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

BitPlaneStack::BitPlaneStack(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  for (auto& plane : planes_) plane.assign(width * height, 0);
}

BitPlaneStack slice(const GrayImage& img) {
  BitPlaneStack stack(img.width(), img.height());
  const auto src = img.pixels();
  for (int k = 0; k < BitPlaneStack::kPlanes; ++k) {
    auto dst = stack.plane(k);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i] = static_cast<std::uint8_t>((src[i] >> k) & 1U);
    }
  }
  return stack;
}

GrayImage recompose(const BitPlaneStack& stack, PlaneMask mask) {
  GrayImage out(stack.width(), stack.height());
  auto dst = out.pixels();
  for (int k = 0; k < BitPlaneStack::kPlanes; ++k) {
    if (!mask.contains(k)) continue;
    const auto src = stack.plane(k);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst[i] = static_cast<std::uint8_t>(dst[i] | ((src[i] & 1U) << k));
    }
  }
  return out;
}

BitPlaneStack replace_planes(const BitPlaneStack& stack, PlaneMask mask,
                             const BitPlaneStack& replacement) {
  if (!stack.same_shape(replacement)) {
    throw Error(Errc::DimensionMismatch, "replacement stack has a different shape");
  }
  BitPlaneStack out = stack;
  for (int k = 0; k < BitPlaneStack::kPlanes; ++k) {
    if (!mask.contains(k)) continue;
    const auto src = replacement.plane(k);
    std::copy(src.begin(), src.end(), out.plane(k).begin());
  }
  return out;
}

GrayImage plane_image(const BitPlaneStack& stack, int k, bool display_scaled) {
  if (k < 0 || k >= BitPlaneStack::kPlanes) {
    throw Error(Errc::InvalidParams, "plane index " + std::to_string(k) + " outside [0, 7]");
  }
  const auto src = stack.plane(k);
  const std::uint8_t on = display_scaled ? 255 : 1;
  std::vector<std::uint8_t> pixels(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) pixels[i] = src[i] ? on : 0;
  return GrayImage(stack.width(), stack.height(), std::move(pixels));
}

void set_plane(BitPlaneStack& stack, int k, const GrayImage& binary) {
  if (k < 0 || k >= BitPlaneStack::kPlanes) {
    throw Error(Errc::InvalidParams, "plane index " + std::to_string(k) + " outside [0, 7]");
  }
  if (binary.width() != stack.width() || binary.height() != stack.height()) {
    throw Error(Errc::DimensionMismatch, "plane image has a different shape");
  }
  const auto src = binary.pixels();
  auto dst = stack.plane(k);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 1 : 0;
}

}  // namespace bpl
