#include "bitplane_lab/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "bitplane_lab/error.hpp"
#include "bitplane_lab/random.hpp"

namespace bpl {

Dataset::Dataset(std::vector<Sample> rows) {
  rows_.reserve(rows.size());
  for (auto& row : rows) add(std::move(row));
}

void Dataset::add(Sample row) {
  if (row.label != kNonFractured && row.label != kFractured) {
    throw Error(Errc::InvalidParams, "row " + row.id + ": label must be 0 or 1");
  }
  if (rows_.empty()) {
    feature_dim_ = row.features.size();
  } else if (row.features.size() != feature_dim_) {
    throw Error(Errc::DimensionMismatch, "row " + row.id + " has " +
                                             std::to_string(row.features.size()) +
                                             " features, expected " + std::to_string(feature_dim_));
  }
  if (std::any_of(row.features.begin(), row.features.end(), [](double v) { return std::isnan(v); })) {
    throw Error(Errc::InvalidParams, "row " + row.id + " has a NaN feature");
  }
  if (!ids_.insert(row.id).second) throw Error(Errc::DuplicateId, row.id);
  rows_.push_back(std::move(row));
}

std::size_t Dataset::count_label(int label) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [&](const Sample& s) { return s.label == label; }));
}

std::vector<bool> stratified_test_mask(std::span<const int> labels, double test_fraction,
                                       std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(Errc::InvalidParams, "test fraction must lie in (0, 1)");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw Error(Errc::InvalidParams, "labels must be 0 or 1");
    }
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 2) {
      throw Error(Errc::InsufficientData, "class " + std::to_string(c) + " has " +
                                              std::to_string(by_class[c].size()) +
                                              " rows, need at least 2");
    }
  }

  // Largest-remainder apportionment of round(fraction * n) test rows.
  const auto n = static_cast<double>(labels.size());
  const auto total_test = static_cast<std::size_t>(std::llround(test_fraction * n));
  std::array<std::size_t, 2> quota{};
  std::array<double, 2> remainder{};
  std::size_t assigned = 0;
  for (int c = 0; c < 2; ++c) {
    const double exact = test_fraction * static_cast<double>(by_class[c].size());
    quota[c] = static_cast<std::size_t>(std::floor(exact));
    remainder[c] = exact - std::floor(exact);
    assigned += quota[c];
  }
  while (assigned < total_test) {
    const int c = remainder[1] > remainder[0] ? 1 : 0;
    ++quota[c];
    remainder[c] = -1.0;
    ++assigned;
    if (remainder[0] < 0 && remainder[1] < 0) break;
  }
  for (int c = 0; c < 2; ++c) {
    quota[c] = std::clamp<std::size_t>(quota[c], 1, by_class[c].size() - 1);
  }

  std::vector<bool> is_test(labels.size(), false);
  SplitMix64 rng(seed);
  for (int c = 0; c < 2; ++c) {
    auto& members = by_class[c];
    shuffle(std::span(members), rng);
    for (std::size_t k = 0; k < quota[c]; ++k) is_test[members[k]] = true;
  }
  return is_test;
}

TrainTestSplit train_test_split(const Dataset& ds, double test_fraction, std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(ds.size());
  for (const auto& row : ds.rows()) labels.push_back(row.label);
  const auto is_test = stratified_test_mask(labels, test_fraction, seed);
  TrainTestSplit split;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    (is_test[i] ? split.test : split.train).add(ds[i]);
  }
  return split;
}

}  // namespace bpl
