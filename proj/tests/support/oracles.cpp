#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace bpl::testing {

namespace {

int pixel_clamped(const GrayImage& img, long x, long y) {
  x = std::clamp(x, 0L, static_cast<long>(img.width()) - 1);
  y = std::clamp(y, 0L, static_cast<long>(img.height()) - 1);
  return img.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

}  // namespace

std::vector<double> brute_force_nlm(const GrayImage& img, const NlmParams& params) {
  const long r = params.template_radius;
  const long s = params.search_radius;
  const double area = static_cast<double>((2 * r + 1) * (2 * r + 1));
  std::vector<double> out;
  out.reserve(img.size());
  for (long y = 0; y < static_cast<long>(img.height()); ++y) {
    for (long x = 0; x < static_cast<long>(img.width()); ++x) {
      double num = 0.0;
      double den = 0.0;
      for (long dy = -s; dy <= s; ++dy) {
        for (long dx = -s; dx <= s; ++dx) {
          double ssd = 0.0;
          for (long ty = -r; ty <= r; ++ty) {
            for (long tx = -r; tx <= r; ++tx) {
              const double d = pixel_clamped(img, x + tx, y + ty) -
                               pixel_clamped(img, x + dx + tx, y + dy + ty);
              ssd += d * d;
            }
          }
          const double w = std::exp(-(ssd / area) / (params.h * params.h));
          num += w * pixel_clamped(img, x + dx, y + dy);
          den += w;
        }
      }
      out.push_back(num / den);
    }
  }
  return out;
}

GrayImage brute_force_nlm_rounded(const GrayImage& img, const NlmParams& params) {
  const auto values = brute_force_nlm(img, params);
  std::vector<std::uint8_t> pixels(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    pixels[i] = static_cast<std::uint8_t>(std::clamp(std::floor(values[i] + 0.5), 0.0, 255.0));
  }
  return GrayImage(img.width(), img.height(), std::move(pixels));
}

double ssim_formula(const GrayImage& x, const GrayImage& y, double c1, double c2) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x.pixels()[i];
    my += y.pixels()[i];
  }
  mx /= n;
  my /= n;
  double vx = 0.0;
  double vy = 0.0;
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = x.pixels()[i] - mx;
    const double b = y.pixels()[i] - my;
    vx += a * a;
    vy += b * b;
    cov += a * b;
  }
  vx /= n;
  vy /= n;
  cov /= n;
  return ((2 * mx * my + c1) * (2 * cov + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
}

int otsu_exhaustive(const GrayImage& img) {
  // Within-class SS = sum x^2 - S0^2/n0 - S1^2/n1, so minimising it means
  // maximising S0^2/n0 + S1^2/n1 = (S0^2 n1 + S1^2 n0) / (n0 n1).
  __extension__ typedef unsigned __int128 u128;
  int best = -1;
  u128 best_num = 0;
  u128 best_den = 1;
  for (int t = 0; t <= 254; ++t) {
    std::uint64_t n0 = 0, n1 = 0, s0 = 0, s1 = 0;
    for (const auto p : img.pixels()) {
      if (p > t) {
        ++n1;
        s1 += p;
      } else {
        ++n0;
        s0 += p;
      }
    }
    if (n0 == 0 || n1 == 0) continue;
    const u128 num = static_cast<u128>(s0) * s0 * n1 + static_cast<u128>(s1) * s1 * n0;
    const u128 den = static_cast<u128>(n0) * n1;
    if (best < 0 || num * best_den > best_num * den) {
      best = t;
      best_num = num;
      best_den = den;
    }
  }
  return best;
}

}  // namespace bpl::testing
