#pragma once

#include <variant>

#include "bitplane_lab/image.hpp"

namespace bpl {

/// SNR in dB of `test` against `reference`:
///   10 * log10( sum(test^2) / sum((reference - test)^2) ).
/// Returns +infinity when the images are equal and -infinity when `test` is all
/// zero while differing from `reference`. Throws Errc::DimensionMismatch.
double snr_db(const GrayImage& reference, const GrayImage& test);

struct GlobalWindow {
  friend bool operator==(GlobalWindow, GlobalWindow) = default;
};

struct SlidingWindow {
  int side = 11;
  double gaussian_sigma = 1.5;
  friend bool operator==(const SlidingWindow&, const SlidingWindow&) = default;
};

using SsimWindow = std::variant<GlobalWindow, SlidingWindow>;

struct SsimParams {
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
  SsimWindow window = SlidingWindow{};

  double c1() const noexcept { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const noexcept { return (k2 * dynamic_range) * (k2 * dynamic_range); }

  /// Throws Errc::InvalidParams unless k1, k2, L > 0, and for sliding windows an
  /// odd side >= 1 and sigma > 0.
  void validate() const;
};

/// Structural similarity with population statistics. Global mode evaluates the
/// index once over the whole image; sliding mode averages it over every fully
/// contained Gaussian-weighted window. Throws Errc::DimensionMismatch, or
/// Errc::WindowTooLarge when the image is smaller than the window.
double ssim(const GrayImage& x, const GrayImage& y, const SsimParams& params = {});

struct QualityScore {
  double snr_db = 0.0;
  double ssim = 0.0;

  double ssim_percent() const noexcept { return ssim * 100.0; }
};

QualityScore quality(const GrayImage& reference, const GrayImage& test,
                     const SsimParams& params = {});

}  // namespace bpl
