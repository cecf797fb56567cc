#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "bitplane_lab/dataset.hpp"
#include "bitplane_lab/image.hpp"
#include "bitplane_lab/random.hpp"

namespace bpl::testing {

/// Uniform pixels, w and h given.
GrayImage random_image(SplitMix64& rng, std::size_t w, std::size_t h);

/// Uniform pixels with sides drawn from [1, max_side].
GrayImage random_image(SplitMix64& rng, std::size_t max_side);

/// Standard normal draw (Box-Muller).
double gaussian(SplitMix64& rng);

/// Smooth soft-tissue gradient plus an elliptical bone at a random angle, then
/// Gaussian noise of the given sigma, rounded and clipped to [0, 255]. When
/// `fractured` is set a dark line crosses the bone.
GrayImage xray_like(SplitMix64& rng, std::size_t side, double noise_sigma, bool fractured = false);

/// Two unit-variance 2-D blobs whose centres are `separation` apart, half the
/// points in each.
Dataset blobs(SplitMix64& rng, std::size_t points, double separation);

/// Fractured/ and Non_fractured/ folders of PGM images named img_NNN.
void write_folder_corpus(const std::filesystem::path& root, std::size_t images, std::size_t side,
                         double noise_sigma, std::uint64_t seed);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace bpl::testing
