#include "bitplane_lab/features.hpp"

#include <cmath>
#include <cstdint>

#include "bitplane_lab/error.hpp"

namespace bpl {

std::array<std::uint64_t, 256> histogram(const GrayImage& img) {
  std::array<std::uint64_t, 256> hist{};
  for (const auto v : img.pixels()) ++hist[v];
  return hist;
}

int otsu_threshold(const GrayImage& img) {
  const auto hist = histogram(img);
  std::int64_t total_count = 0;
  std::int64_t total_sum = 0;
  int distinct = 0;
  for (int v = 0; v < 256; ++v) {
    total_count += static_cast<std::int64_t>(hist[v]);
    total_sum += static_cast<std::int64_t>(hist[v]) * v;
    distinct += hist[v] > 0 ? 1 : 0;
  }
  if (distinct < 2) {
    throw Error(Errc::DegenerateHistogram, "image has a single intensity level");
  }

  // w0 * w1 * (mu0 - mu1)^2 == (S0 * n1 - S1 * n0)^2 / (N^2 * n0 * n1); the
  // constant N^2 is dropped and the numerator difference is exact in integers.
  int best_t = -1;
  double best_score = -1.0;
  std::int64_t n0 = 0;
  std::int64_t s0 = 0;
  for (int t = 0; t < 255; ++t) {
    n0 += static_cast<std::int64_t>(hist[t]);
    s0 += static_cast<std::int64_t>(hist[t]) * t;
    const std::int64_t n1 = total_count - n0;
    const std::int64_t s1 = total_sum - s0;
    double score = 0.0;
    if (n0 > 0 && n1 > 0) {
      const auto diff = static_cast<double>(s0 * n1 - s1 * n0);
      score = diff * diff / (static_cast<double>(n0) * static_cast<double>(n1));
    }
    if (score > best_score) {
      best_score = score;
      best_t = t;
    }
  }
  return best_t;
}

GrayImage foreground_mask(const GrayImage& img, int threshold) {
  GrayImage mask(img.width(), img.height());
  const auto src = img.pixels();
  auto dst = mask.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] > threshold ? 1 : 0;
  return mask;
}

namespace {

struct ClassStats {
  double mean = 0.0;
  double var = 0.0;
};

ClassStats masked_stats(const GrayImage& img, const GrayImage& mask, std::uint8_t member) {
  const auto px = img.pixels();
  const auto mk = mask.pixels();
  std::uint64_t n = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (mk[i] == member) {
      ++n;
      sum += px[i];
    }
  }
  if (n == 0) return {};
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (mk[i] == member) {
      const double d = px[i] - mean;
      ss += d * d;
    }
  }
  return {mean, ss / static_cast<double>(n)};
}

}  // namespace

FeatureVector handcrafted_features(const GrayImage& img) {
  const GrayImage mask = foreground_mask(img, otsu_threshold(img));
  const ClassStats fg = masked_stats(img, mask, 1);
  const ClassStats bg = masked_stats(img, mask, 0);
  FeatureVector out(kHandcraftedDim);
  out[kFgMean] = fg.mean;
  out[kFgVar] = fg.var;
  out[kFgStd] = std::sqrt(fg.var);
  out[kBgMean] = bg.mean;
  out[kBgVar] = bg.var;
  out[kBgStd] = std::sqrt(bg.var);
  return out;
}

}  // namespace bpl
