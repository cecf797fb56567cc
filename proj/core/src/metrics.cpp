#include "bitplane_lab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "bitplane_lab/error.hpp"

namespace bpl {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw Error(Errc::DimensionMismatch,
                std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                    std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
}

double ssim_index(double mu_x, double mu_y, double var_x, double var_y, double cov, double c1,
                  double c2) {
  const double num = (2.0 * (mu_x * mu_y) + c1) * (2.0 * cov + c2);
  const double den = (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2);
  return std::clamp(num / den, -1.0, 1.0);
}

double ssim_global(const GrayImage& x, const GrayImage& y, double c1, double c2) {
  const auto px = x.pixels();
  const auto py = y.pixels();
  const auto n = static_cast<double>(px.size());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    sx += px[i];
    sy += py[i];
  }
  const double mu_x = sx / n;
  const double mu_y = sy / n;
  double vxx = 0.0;
  double vyy = 0.0;
  double vxy = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    const double dx = px[i] - mu_x;
    const double dy = py[i] - mu_y;
    vxx += dx * dx;
    vyy += dy * dy;
    vxy += dx * dy;
  }
  return ssim_index(mu_x, mu_y, vxx / n, vyy / n, vxy / n, c1, c2);
}

std::vector<double> gaussian_kernel(int side, double sigma) {
  std::vector<double> k(static_cast<std::size_t>(side));
  const double centre = (side - 1) / 2.0;
  double total = 0.0;
  for (int i = 0; i < side; ++i) {
    const double d = i - centre;
    k[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    total += k[static_cast<std::size_t>(i)];
  }
  for (auto& v : k) v /= total;
  return k;
}

// Mean SSIM over every fully contained window, using separable Gaussian moments.
double ssim_sliding(const GrayImage& x, const GrayImage& y, const SlidingWindow& window, double c1,
                    double c2) {
  const auto side = static_cast<std::size_t>(window.side);
  const std::size_t width = x.width();
  const std::size_t height = x.height();
  const std::size_t out_w = width - side + 1;
  const std::size_t out_h = height - side + 1;
  const auto kernel = gaussian_kernel(window.side, window.gaussian_sigma);

  // Horizontal pass: five moment planes of size out_w x height.
  enum { kX, kY, kXX, kYY, kXY, kMoments };
  std::vector<double> horiz(kMoments * out_w * height);
  auto plane = [&](int m) { return horiz.data() + static_cast<std::size_t>(m) * out_w * height; };
  for (std::size_t row = 0; row < height; ++row) {
    const auto rx = x.row(row);
    const auto ry = y.row(row);
    for (std::size_t u = 0; u < out_w; ++u) {
      double m[kMoments] = {};
      for (std::size_t k = 0; k < side; ++k) {
        const double a = rx[u + k];
        const double b = ry[u + k];
        const double w = kernel[k];
        m[kX] += w * a;
        m[kY] += w * b;
        m[kXX] += w * (a * a);
        m[kYY] += w * (b * b);
        m[kXY] += w * (a * b);
      }
      for (int i = 0; i < kMoments; ++i) plane(i)[row * out_w + u] = m[i];
    }
  }

  double total = 0.0;
  for (std::size_t v = 0; v < out_h; ++v) {
    for (std::size_t u = 0; u < out_w; ++u) {
      double m[kMoments] = {};
      for (std::size_t k = 0; k < side; ++k) {
        const double w = kernel[k];
        for (int i = 0; i < kMoments; ++i) m[i] += w * plane(i)[(v + k) * out_w + u];
      }
      const double var_x = m[kXX] - m[kX] * m[kX];
      const double var_y = m[kYY] - m[kY] * m[kY];
      const double cov = m[kXY] - m[kX] * m[kY];
      total += ssim_index(m[kX], m[kY], var_x, var_y, cov, c1, c2);
    }
  }
  return total / static_cast<double>(out_w * out_h);
}

}  // namespace

double snr_db(const GrayImage& reference, const GrayImage& test) {
  require_same_shape(reference, test);
  const auto f = reference.pixels();
  const auto g = test.pixels();
  std::uint64_t signal = 0;
  std::uint64_t noise = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(f[i]) - g[i];
    signal += static_cast<std::uint64_t>(g[i]) * g[i];
    noise += static_cast<std::uint64_t>(d * d);
  }
  if (noise == 0) return std::numeric_limits<double>::infinity();
  if (signal == 0) return -std::numeric_limits<double>::infinity();
  // Difference of logs keeps snr(g, a) == -snr(g, b) exact when a + b == g.
  return 10.0 * (std::log10(static_cast<double>(signal)) - std::log10(static_cast<double>(noise)));
}

void SsimParams::validate() const {
  if (!(k1 > 0.0) || !(k2 > 0.0) || !(dynamic_range > 0.0)) {
    throw Error(Errc::InvalidParams, "SSIM k1, k2 and dynamic range must be > 0");
  }
  if (const auto* sliding = std::get_if<SlidingWindow>(&window)) {
    if (sliding->side < 1 || sliding->side % 2 == 0) {
      throw Error(Errc::InvalidParams, "SSIM window side must be odd and >= 1");
    }
    if (!(sliding->gaussian_sigma > 0.0)) {
      throw Error(Errc::InvalidParams, "SSIM gaussian sigma must be > 0");
    }
  }
}

double ssim(const GrayImage& x, const GrayImage& y, const SsimParams& params) {
  params.validate();
  require_same_shape(x, y);
  if (x.empty()) {
    throw Error(Errc::InvalidParams, "SSIM of empty images");
  }
  if (const auto* sliding = std::get_if<SlidingWindow>(&params.window)) {
    const auto side = static_cast<std::size_t>(sliding->side);
    if (x.width() < side || x.height() < side) {
      throw Error(Errc::WindowTooLarge, "image " + std::to_string(x.width()) + "x" +
                                            std::to_string(x.height()) + " smaller than " +
                                            std::to_string(side) + "x" + std::to_string(side) +
                                            " window");
    }
    return ssim_sliding(x, y, *sliding, params.c1(), params.c2());
  }
  return ssim_global(x, y, params.c1(), params.c2());
}

QualityScore quality(const GrayImage& reference, const GrayImage& test, const SsimParams& params) {
  return {snr_db(reference, test), ssim(reference, test, params)};
}

}  // namespace bpl
