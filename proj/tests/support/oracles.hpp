#pragma once

#include <vector>

#include "bitplane_lab/denoise.hpp"
#include "bitplane_lab/image.hpp"

namespace bpl::testing {

/// Textbook NLM, one pixel at a time: for every pixel and every search offset
/// the full patch distance is recomputed from clamp-to-edge coordinates.
/// Returns the unrounded weighted averages in row-major order.
std::vector<double> brute_force_nlm(const GrayImage& img, const NlmParams& params);

/// brute_force_nlm rounded half up.
GrayImage brute_force_nlm_rounded(const GrayImage& img, const NlmParams& params);

/// Whole-image structural similarity with population statistics, written from
/// the formula with no shared code.
double ssim_formula(const GrayImage& x, const GrayImage& y, double c1, double c2);

/// Smallest t in [0, 254] minimising the within-class sum of squares (computed
/// from raw pixels, exact integer comparison). -1 when no t splits the image.
int otsu_exhaustive(const GrayImage& img);

}  // namespace bpl::testing
