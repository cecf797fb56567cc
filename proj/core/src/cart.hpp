#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bitplane_lab/dataset.hpp"
#include "bitplane_lab/random.hpp"
#include "bitplane_lab/tree.hpp"

namespace bpl::detail {

struct CartOptions {
  std::optional<int> max_depth;
  int min_samples_split = 2;
  /// Non-constant features to examine per node; 0 or >= feature_dim means all,
  /// in index order, without touching the generator.
  std::size_t features_per_node = 0;
  SplitMix64* rng = nullptr;
};

/// Grows a CART tree on the given row indices of `data`; repeated indices act as
/// bootstrap multiplicities.
TreeModel grow_tree(const Dataset& data, std::vector<std::size_t> rows, const CartOptions& options);

}  // namespace bpl::detail
