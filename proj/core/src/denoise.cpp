#include "bitplane_lab/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bitplane_lab/bitplane.hpp"
#include "bitplane_lab/error.hpp"
#include "bitplane_lab/parallel.hpp"

namespace bpl {

void NlmParams::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(Errc::InvalidParams, "NLM filter strength h must be > 0");
  }
  if (template_radius < 1) {
    throw Error(Errc::InvalidParams, "NLM template_radius must be >= 1");
  }
  if (search_radius < template_radius) {
    throw Error(Errc::InvalidParams, "NLM search_radius must be >= template_radius");
  }
}

namespace {

// Clamp-to-edge copy of the image with `pad` extra pixels on every side.
struct PaddedImage {
  std::size_t width = 0;
  std::vector<std::int32_t> values;

  PaddedImage(const GrayImage& img, std::size_t pad) : width(img.width() + 2 * pad) {
    const std::size_t height = img.height() + 2 * pad;
    values.resize(width * height);
    const auto last_x = static_cast<std::ptrdiff_t>(img.width()) - 1;
    const auto last_y = static_cast<std::ptrdiff_t>(img.height()) - 1;
    for (std::size_t py = 0; py < height; ++py) {
      const auto sy = std::clamp(static_cast<std::ptrdiff_t>(py) - static_cast<std::ptrdiff_t>(pad),
                                 std::ptrdiff_t{0}, last_y);
      for (std::size_t px = 0; px < width; ++px) {
        const auto sx = std::clamp(
            static_cast<std::ptrdiff_t>(px) - static_cast<std::ptrdiff_t>(pad), std::ptrdiff_t{0},
            last_x);
        values[py * width + px] = img.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy));
      }
    }
  }

  const std::int32_t* row(std::size_t py) const { return values.data() + py * width; }
};

// exp(-(ssd / area) / h^2), optionally tabulated over every reachable ssd.
class PatchWeights {
 public:
  PatchWeights(double h, std::uint64_t area, std::uint64_t max_ssd, bool tabulate)
      : area_(static_cast<double>(area)), h2_(h * h) {
    if (tabulate) {
      table_.resize(max_ssd + 1);
      for (std::uint64_t s = 0; s <= max_ssd; ++s) table_[s] = compute(s);
    }
  }

  double operator()(std::uint64_t ssd) const {
    return table_.empty() ? compute(ssd) : table_[ssd];
  }

 private:
  double compute(std::uint64_t ssd) const {
    return std::exp(-(static_cast<double>(ssd) / area_) / h2_);
  }

  double area_;
  double h2_;
  std::vector<double> table_;
};

constexpr std::size_t kBandRows = 16;

}  // namespace

GrayImage nlm_denoise(const GrayImage& img, const NlmParams& params) {
  params.validate();
  if (img.empty()) {
    throw Error(Errc::InvalidParams, "cannot denoise an empty image");
  }
  const auto [lo, hi] = std::minmax_element(img.pixels().begin(), img.pixels().end());
  if (*lo == *hi) return img;

  const std::size_t width = img.width();
  const std::size_t height = img.height();
  const auto r = static_cast<std::size_t>(params.template_radius);
  const auto search = params.search_radius;
  const std::size_t pad = static_cast<std::size_t>(search) + r;
  const std::size_t span = 2 * r + 1;
  const std::uint64_t area = span * span;

  const PaddedImage padded(img, pad);

  const auto range = static_cast<std::uint64_t>(*hi - *lo);
  const std::uint64_t max_ssd = area * range * range;
  const std::uint64_t offsets = static_cast<std::uint64_t>(2 * search + 1) * (2 * search + 1);
  const bool tabulate = max_ssd < (std::uint64_t{1} << 24) && max_ssd < offsets * width * height;
  const PatchWeights weight(params.h, area, max_ssd, tabulate);

  GrayImage out(width, height);
  const std::size_t bands = (height + kBandRows - 1) / kBandRows;

  parallel_for(bands, [&](std::size_t band) {
    const std::size_t y0 = band * kBandRows;
    const std::size_t y1 = std::min(height, y0 + kBandRows);
    const std::size_t rows = y1 - y0;
    std::vector<double> num(rows * width, 0.0);
    std::vector<double> den(rows * width, 0.0);
    std::vector<std::uint64_t> colsum(width + 2 * r);

    // Adds (or removes) the squared differences of one image row (border rows
    // allowed) between the reference and the (dx, dy)-shifted copy.
    auto accumulate_row = [&](std::ptrdiff_t y, std::ptrdiff_t dy, std::ptrdiff_t dx, bool add) {
      const auto py = y + static_cast<std::ptrdiff_t>(pad);
      const auto left = static_cast<std::ptrdiff_t>(pad - r);
      const std::int32_t* a = padded.row(static_cast<std::size_t>(py)) + left;
      const std::int32_t* b = padded.row(static_cast<std::size_t>(py + dy)) + left + dx;
      for (std::size_t cx = 0; cx < colsum.size(); ++cx) {
        const std::int64_t d = a[cx] - b[cx];
        const auto d2 = static_cast<std::uint64_t>(d * d);
        if (add) {
          colsum[cx] += d2;
        } else {
          colsum[cx] -= d2;
        }
      }
    };

    const auto rr = static_cast<std::ptrdiff_t>(r);
    for (std::ptrdiff_t dy = -search; dy <= search; ++dy) {
      for (std::ptrdiff_t dx = -search; dx <= search; ++dx) {
        std::fill(colsum.begin(), colsum.end(), 0);
        for (std::ptrdiff_t ty = -rr; ty <= rr; ++ty) {
          accumulate_row(static_cast<std::ptrdiff_t>(y0) + ty, dy, dx, true);
        }

        for (std::size_t y = y0; y < y1; ++y) {
          const auto yy = static_cast<std::ptrdiff_t>(y);
          if (y > y0) {
            accumulate_row(yy + rr, dy, dx, true);
            accumulate_row(yy - rr - 1, dy, dx, false);
          }
          const std::int32_t* sample =
              padded.row(static_cast<std::size_t>(yy + static_cast<std::ptrdiff_t>(pad) + dy)) +
              static_cast<std::ptrdiff_t>(pad) + dx;
          double* num_row = num.data() + (y - y0) * width;
          double* den_row = den.data() + (y - y0) * width;

          std::uint64_t ssd = 0;
          for (std::size_t cx = 0; cx < span; ++cx) ssd += colsum[cx];
          for (std::size_t x = 0; x < width; ++x) {
            if (x > 0) ssd = ssd + colsum[x + 2 * r] - colsum[x - 1];
            const double w = weight(ssd);
            num_row[x] += w * sample[x];
            den_row[x] += w;
          }
        }
      }
    }

    for (std::size_t y = y0; y < y1; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const std::size_t i = (y - y0) * width + x;
        const double v = std::floor(num[i] / den[i] + 0.5);
        out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
  });
  return out;
}

GrayImage denoise_full(const GrayImage& img, const NlmParams& params) {
  return nlm_denoise(img, params);
}

GrayImage denoise_partial(const GrayImage& img, const NlmParams& params) {
  params.validate();
  const BitPlaneStack stack = slice(img);
  BitPlaneStack denoised = stack;
  for (const int k : masks::kLsb2.indices()) {
    set_plane(denoised, k, nlm_denoise(plane_image(stack, k), params));
  }
  return recompose(replace_planes(stack, masks::kLsb2, denoised), masks::kOriginal);
}

}  // namespace bpl
