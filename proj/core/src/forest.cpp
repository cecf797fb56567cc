#include "bitplane_lab/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bitplane_lab/error.hpp"
#include "bitplane_lab/parallel.hpp"
#include "bitplane_lab/random.hpp"
#include "cart.hpp"

namespace bpl {

std::size_t FeaturesPerSplit::resolve(std::size_t feature_dim) const {
  if (feature_dim == 0) return 0;
  std::size_t k = feature_dim;
  switch (kind) {
    case Kind::Sqrt:
      k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(feature_dim))));
      break;
    case Kind::All:
      break;
    case Kind::Fixed:
      k = static_cast<std::size_t>(std::max(count, 1));
      break;
  }
  return std::clamp<std::size_t>(k, 1, feature_dim);
}

void ForestParams::validate() const {
  if (n_estimators < 1) {
    throw Error(Errc::InvalidParams, "n_estimators must be >= 1");
  }
  if (features_per_split.kind == FeaturesPerSplit::Kind::Fixed && features_per_split.count < 1) {
    throw Error(Errc::InvalidParams, "fixed features_per_split must be >= 1");
  }
  TreeParams{max_depth, min_samples_split, rng_seed}.validate();
}

ForestModel::ForestModel(std::vector<TreeModel> trees, std::vector<std::uint64_t> tree_seeds)
    : trees_(std::move(trees)), tree_seeds_(std::move(tree_seeds)) {
  if (trees_.empty()) {
    throw Error(Errc::InvalidParams, "forest has no trees");
  }
  if (tree_seeds_.size() != trees_.size()) {
    throw Error(Errc::InvalidParams, "forest needs one seed per tree");
  }
  for (const auto& tree : trees_) {
    if (tree.feature_dim() != trees_.front().feature_dim()) {
      throw Error(Errc::DimensionMismatch, "forest trees disagree on feature dimension");
    }
  }
}

std::size_t ForestModel::feature_dim() const noexcept {
  return trees_.empty() ? 0 : trees_.front().feature_dim();
}

std::size_t ForestModel::votes_for_positive(std::span<const double> x) const {
  std::size_t votes = 0;
  for (const auto& tree : trees_) votes += tree.predict(x) == 1 ? 1 : 0;
  return votes;
}

int ForestModel::predict(std::span<const double> x) const {
  if (trees_.empty()) {
    throw Error(Errc::InvalidParams, "predict on an empty forest");
  }
  const std::size_t positive = votes_for_positive(x);
  return positive * 2 > trees_.size() ? 1 : 0;
}

ForestModel fit_forest(const Dataset& train, const ForestParams& params) {
  params.validate();
  if (train.empty()) {
    throw Error(Errc::EmptyDataset, "cannot fit a forest on an empty dataset");
  }
  const auto n_trees = static_cast<std::size_t>(params.n_estimators);
  const std::size_t n = train.size();
  std::vector<TreeModel> trees(n_trees);
  std::vector<std::uint64_t> seeds(n_trees);
  for (std::size_t i = 0; i < n_trees; ++i) seeds[i] = derive_seed(params.rng_seed, i);

  parallel_for(n_trees, [&](std::size_t i) {
    SplitMix64 rng(seeds[i]);
    std::vector<std::size_t> rows(n);
    if (params.bootstrap) {
      for (auto& r : rows) r = static_cast<std::size_t>(rng.below(n));
    } else {
      std::iota(rows.begin(), rows.end(), 0);
    }
    detail::CartOptions options;
    options.max_depth = params.max_depth;
    options.min_samples_split = params.min_samples_split;
    options.features_per_node = params.features_per_split.resolve(train.feature_dim());
    options.rng = &rng;
    trees[i] = detail::grow_tree(train, std::move(rows), options);
  });
  return ForestModel(std::move(trees), std::move(seeds));
}

}  // namespace bpl
