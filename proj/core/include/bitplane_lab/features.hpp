#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bitplane_lab/image.hpp"

namespace bpl {

using FeatureVector = std::vector<double>;

/// Layout of the handcrafted vector.
enum HandcraftedIndex : int {
  kFgMean = 0,
  kFgVar,
  kFgStd,
  kBgMean,
  kBgVar,
  kBgStd,
  kHandcraftedDim
};

/// 256-bin intensity histogram.
std::array<std::uint64_t, 256> histogram(const GrayImage& img);

/// Otsu level t in [0, 254] maximizing the between-class variance
/// w0 * w1 * (mu0 - mu1)^2, where class 1 is the pixels strictly above t. Ties go
/// to the smallest t. Throws Errc::DegenerateHistogram on a constant image.
int otsu_threshold(const GrayImage& img);

/// 1 where pixel > t.
GrayImage foreground_mask(const GrayImage& img, int threshold);

/// [fg_mean, fg_var, fg_std, bg_mean, bg_var, bg_std] over the pixels above and
/// at-or-below the Otsu level respectively. Population variance; an empty
/// class yields zeros. Propagates Errc::DegenerateHistogram.
FeatureVector handcrafted_features(const GrayImage& img);

}  // namespace bpl
