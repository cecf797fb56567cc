#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitplane_lab/dataset.hpp"

namespace bpl {

struct TreeParams {
  std::optional<int> max_depth;  // unlimited when empty
  int min_samples_split = 2;
  std::uint64_t rng_seed = 42;

  /// Throws Errc::InvalidParams unless max_depth >= 1 (when set) and
  /// min_samples_split >= 2.
  void validate() const;
};

/// A node is a leaf when feature < 0. Internal nodes send x[feature] <= threshold
/// to `left`. class_counts holds the (bootstrap-weighted) rows reaching the node.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::array<std::uint64_t, 2> class_counts{};

  bool is_leaf() const noexcept { return feature < 0; }
  /// Majority class, ties to 0.
  int label() const noexcept { return class_counts[1] > class_counts[0] ? 1 : 0; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

class TreeModel {
 public:
  TreeModel() = default;
  /// Node 0 is the root. Throws Errc::InvalidParams on a malformed node graph.
  TreeModel(std::vector<TreeNode> nodes, std::size_t feature_dim);

  /// Throws Errc::DimensionMismatch when x.size() != feature_dim().
  int predict(std::span<const double> x) const;

  std::span<const TreeNode> nodes() const noexcept { return nodes_; }
  std::size_t feature_dim() const noexcept { return feature_dim_; }
  std::size_t depth() const;
  std::size_t leaf_count() const;

  friend bool operator==(const TreeModel&, const TreeModel&) = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t feature_dim_ = 0;
};

/// Gini impurity 1 - sum p_c^2 of a two-class count pair; 0 for an empty node.
double gini(std::uint64_t n0, std::uint64_t n1) noexcept;

/// Greedy CART with Gini impurity over every feature. Candidate thresholds are
/// midpoints between consecutive distinct values; ties go to the lowest feature
/// index, then the lowest threshold. Throws Errc::EmptyDataset.
TreeModel fit_tree(const Dataset& train, const TreeParams& params = {});

inline int predict_tree(const TreeModel& model, std::span<const double> x) {
  return model.predict(x);
}

}  // namespace bpl
