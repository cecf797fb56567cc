#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "bitplane_lab/features.hpp"

namespace bpl {

inline constexpr int kNonFractured = 0;
inline constexpr int kFractured = 1;

struct Sample {
  std::string id;
  FeatureVector features;
  int label = kNonFractured;
};

/// Labelled feature rows with a common dimension. Ids are unique and labels are
/// 0 (non-fractured) or 1 (fractured).
class Dataset {
 public:
  Dataset() = default;
  /// Validates every row; throws Errc::DimensionMismatch, Errc::InvalidParams
  /// (label outside {0,1}, NaN feature) or Errc::DuplicateId.
  explicit Dataset(std::vector<Sample> rows);

  void add(Sample row);

  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t feature_dim() const noexcept { return feature_dim_; }

  const Sample& operator[](std::size_t i) const { return rows_[i]; }
  std::span<const Sample> rows() const noexcept { return rows_; }

  std::size_t count_label(int label) const noexcept;

 private:
  std::vector<Sample> rows_;
  std::unordered_set<std::string> ids_;
  std::size_t feature_dim_ = 0;
};

struct TrainTestSplit {
  Dataset train;
  Dataset test;
};

/// Stratified membership: result[i] is true when row i goes to the test side.
/// The test side holds round(test_fraction * n) rows, apportioned over the two
/// classes by largest remainder and clamped so each class keeps at least one
/// row on both sides. Throws Errc::InvalidParams for a fraction outside (0, 1) and
/// Errc::InsufficientData when a class has fewer than 2 rows.
std::vector<bool> stratified_test_mask(std::span<const int> labels, double test_fraction,
                                       std::uint64_t seed);

/// Rows keep their original relative order on both sides.
TrainTestSplit train_test_split(const Dataset& ds, double test_fraction, std::uint64_t seed);

}  // namespace bpl
