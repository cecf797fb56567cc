#pragma once

#include "bitplane_lab/image.hpp"

namespace bpl {

/// Non-local-means configuration. Patch is (2 * template_radius + 1)^2 pixels and
/// the search window (2 * search_radius + 1)^2 pixels.
struct NlmParams {
  double h = 10.0;
  int template_radius = 3;
  int search_radius = 10;

  /// Throws Errc::InvalidParams unless h > 0, template_radius >= 1 and
  /// search_radius >= template_radius.
  void validate() const;

  friend bool operator==(const NlmParams&, const NlmParams&) = default;
};

/// Non-local means with clamp-to-edge borders. Each output pixel is the
/// normalized average of the search-window pixels weighted by
/// exp(-d^2 / h^2), d^2 being the mean squared difference of the two patches;
/// the centre pixel contributes with weight 1. Results are rounded half-up and
/// clamped to [0, 255].
///
/// Rows are processed in parallel bands with a fixed per-pixel accumulation
/// order. Output does not depend on the thread count.
GrayImage nlm_denoise(const GrayImage& img, const NlmParams& params = {});

/// NLM over all eight bits at once.
GrayImage denoise_full(const GrayImage& img, const NlmParams& params = {});

/// Denoises only bit planes 0 and 1. Each plane is filtered as a {0, 1} raster
/// (the rounded NLM output is the re-binarized plane) and spliced back; bits
/// 2-7 are returned untouched.
GrayImage denoise_partial(const GrayImage& img, const NlmParams& params = {});

}  // namespace bpl
