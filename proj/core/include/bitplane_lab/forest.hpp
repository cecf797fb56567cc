#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bitplane_lab/tree.hpp"

namespace bpl {

struct FeaturesPerSplit {
  enum class Kind { Sqrt, All, Fixed };
  Kind kind = Kind::Sqrt;
  int count = 0;  // used by Fixed

  static FeaturesPerSplit sqrt() { return {Kind::Sqrt, 0}; }
  static FeaturesPerSplit all() { return {Kind::All, 0}; }
  static FeaturesPerSplit fixed(int k) { return {Kind::Fixed, k}; }

  /// Number of candidate features per node for a d-dimensional input, in [1, d].
  std::size_t resolve(std::size_t feature_dim) const;

  friend bool operator==(const FeaturesPerSplit&, const FeaturesPerSplit&) = default;
};

struct ForestParams {
  int n_estimators = 100;
  FeaturesPerSplit features_per_split = FeaturesPerSplit::sqrt();
  bool bootstrap = true;
  std::uint64_t rng_seed = 42;
  std::optional<int> max_depth;
  int min_samples_split = 2;

  /// Throws Errc::InvalidParams on n_estimators < 1, Fixed(k < 1) or invalid
  /// tree limits.
  void validate() const;
};

class ForestModel {
 public:
  ForestModel() = default;
  ForestModel(std::vector<TreeModel> trees, std::vector<std::uint64_t> tree_seeds);

  /// Unweighted majority vote; an exact tie goes to label 0.
  int predict(std::span<const double> x) const;
  /// Number of trees voting for label 1.
  std::size_t votes_for_positive(std::span<const double> x) const;

  std::span<const TreeModel> trees() const noexcept { return trees_; }
  std::span<const std::uint64_t> tree_seeds() const noexcept { return tree_seeds_; }
  std::size_t feature_dim() const noexcept;

  friend bool operator==(const ForestModel&, const ForestModel&) = default;

 private:
  std::vector<TreeModel> trees_;
  std::vector<std::uint64_t> tree_seeds_;
};

/// Bagged CART ensemble. Tree i draws its bootstrap sample and per-node feature
/// subsets from a stream seeded by derive_seed(rng_seed, i). Output does not
/// depend on the thread count.
ForestModel fit_forest(const Dataset& train, const ForestParams& params = {});

inline int predict_forest(const ForestModel& model, std::span<const double> x) {
  return model.predict(x);
}

}  // namespace bpl
