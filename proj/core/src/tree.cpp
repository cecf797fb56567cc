#include "bitplane_lab/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "bitplane_lab/error.hpp"
#include "cart.hpp"

namespace bpl {

void TreeParams::validate() const {
  if (max_depth && *max_depth < 1) {
    throw Error(Errc::InvalidParams, "max_depth must be >= 1");
  }
  if (min_samples_split < 2) {
    throw Error(Errc::InvalidParams, "min_samples_split must be >= 2");
  }
}

double gini(std::uint64_t n0, std::uint64_t n1) noexcept {
  const std::uint64_t n = n0 + n1;
  if (n == 0) return 0.0;
  const double p0 = static_cast<double>(n0) / static_cast<double>(n);
  const double p1 = static_cast<double>(n1) / static_cast<double>(n);
  return 1.0 - (p0 * p0 + p1 * p1);
}

TreeModel::TreeModel(std::vector<TreeNode> nodes, std::size_t feature_dim)
    : nodes_(std::move(nodes)), feature_dim_(feature_dim) {
  if (nodes_.empty()) {
    throw Error(Errc::InvalidParams, "tree has no nodes");
  }
  const auto count = static_cast<std::int32_t>(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    if (node.is_leaf()) continue;
    const auto self = static_cast<std::int32_t>(i);
    if (static_cast<std::size_t>(node.feature) >= feature_dim_ || node.left <= self ||
        node.right <= self || node.left >= count || node.right >= count) {
      throw Error(Errc::InvalidParams, "malformed tree node " + std::to_string(i));
    }
  }
}

int TreeModel::predict(std::span<const double> x) const {
  if (x.size() != feature_dim_) {
    throw Error(Errc::DimensionMismatch, "input has " + std::to_string(x.size()) +
                                             " features, model expects " +
                                             std::to_string(feature_dim_));
  }
  std::size_t i = 0;
  while (!nodes_[i].is_leaf()) {
    const auto& node = nodes_[i];
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(node.feature)] <= node.threshold
                                     ? node.left
                                     : node.right);
  }
  return nodes_[i].label();
}

std::size_t TreeModel::depth() const {
  std::vector<std::size_t> level(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, level[i]);
    if (!nodes_[i].is_leaf()) {
      level[static_cast<std::size_t>(nodes_[i].left)] = level[i] + 1;
      level[static_cast<std::size_t>(nodes_[i].right)] = level[i] + 1;
    }
  }
  return deepest;
}

std::size_t TreeModel::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

namespace detail {

namespace {

using detail::u128;

// Split quality as the exact rational sum over children of (c0^2 + c1^2) / n_child,
// which is n * (1 - weighted Gini). Larger is better.
struct Purity {
  u128 num = 0;
  u128 den = 1;

  static Purity of(std::uint64_t l0, std::uint64_t l1, std::uint64_t r0, std::uint64_t r1) {
    const u128 nl = l0 + l1;
    const u128 nr = r0 + r1;
    const u128 sl = u128{l0} * l0 + u128{l1} * l1;
    const u128 sr = u128{r0} * r0 + u128{r1} * r1;
    return {sl * nr + sr * nl, nl * nr};
  }

  friend bool operator<(const Purity& a, const Purity& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Purity& a, const Purity& b) {
    return a.num * b.den == b.num * a.den;
  }
};

struct Candidate {
  bool valid = false;
  Purity purity;
  int feature = -1;
  double threshold = 0.0;

  // Better purity wins; ties go to the lower feature index, then threshold.
  bool beats(const Candidate& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (other.purity < purity) return true;
    if (!(purity == other.purity)) return false;
    if (feature != other.feature) return feature < other.feature;
    return threshold < other.threshold;
  }
};

double midpoint(double a, double b) {
  const double mid = a + (b - a) / 2.0;
  return (mid >= b || mid < a) ? a : mid;
}

class Builder {
 public:
  Builder(const Dataset& data, const CartOptions& options) : data_(data), options_(options) {}

  TreeModel build(std::vector<std::size_t> rows) {
    rows_ = std::move(rows);
    nodes_.clear();
    nodes_.push_back(make_node(0, rows_.size()));

    struct Pending {
      std::size_t node;
      std::size_t begin;
      std::size_t end;
      int depth;
    };
    std::vector<Pending> stack{{0, 0, rows_.size(), 0}};
    while (!stack.empty()) {
      const Pending job = stack.back();
      stack.pop_back();
      const auto split = try_split(job.node, job.begin, job.end, job.depth);
      if (!split) continue;
      const auto [mid, left, right] = *split;
      stack.push_back({right, mid, job.end, job.depth + 1});
      stack.push_back({left, job.begin, mid, job.depth + 1});
    }
    return TreeModel(std::move(nodes_), data_.feature_dim());
  }

 private:
  struct SplitResult {
    std::size_t mid;
    std::size_t left;
    std::size_t right;
  };

  TreeNode make_node(std::size_t begin, std::size_t end) const {
    TreeNode node;
    for (std::size_t i = begin; i < end; ++i) {
      ++node.class_counts[static_cast<std::size_t>(data_[rows_[i]].label)];
    }
    return node;
  }

  std::optional<SplitResult> try_split(std::size_t node_index, std::size_t begin, std::size_t end,
                                       int depth) {
    const auto counts = nodes_[node_index].class_counts;
    if (counts[0] == 0 || counts[1] == 0) return std::nullopt;
    if (options_.max_depth && depth >= *options_.max_depth) return std::nullopt;
    if (end - begin < static_cast<std::size_t>(options_.min_samples_split)) return std::nullopt;

    const Candidate best = find_best(begin, end, counts);
    if (!best.valid) return std::nullopt;

    const auto first = rows_.begin() + static_cast<std::ptrdiff_t>(begin);
    const auto last = rows_.begin() + static_cast<std::ptrdiff_t>(end);
    const auto f = static_cast<std::size_t>(best.feature);
    const auto pivot = std::stable_partition(
        first, last, [&](std::size_t r) { return data_[r].features[f] <= best.threshold; });
    const auto mid = static_cast<std::size_t>(pivot - rows_.begin());

    const std::size_t left = nodes_.size();
    nodes_.push_back(make_node(begin, mid));
    nodes_.push_back(make_node(mid, end));
    auto& node = nodes_[node_index];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = static_cast<std::int32_t>(left);
    node.right = static_cast<std::int32_t>(left + 1);
    return SplitResult{mid, left, left + 1};
  }

  // Best threshold on one feature, or an invalid candidate when the feature is
  // constant over the node.
  Candidate best_on_feature(int feature, std::size_t begin, std::size_t end,
                            const std::array<std::uint64_t, 2>& counts) {
    const auto f = static_cast<std::size_t>(feature);
    scratch_.clear();
    for (std::size_t i = begin; i < end; ++i) {
      const auto& row = data_[rows_[i]];
      scratch_.emplace_back(row.features[f], row.label);
    }
    std::sort(scratch_.begin(), scratch_.end());

    Candidate best;
    std::uint64_t l0 = 0;
    std::uint64_t l1 = 0;
    for (std::size_t i = 0; i + 1 < scratch_.size(); ++i) {
      (scratch_[i].second == 0 ? l0 : l1) += 1;
      if (!(scratch_[i].first < scratch_[i + 1].first)) continue;
      Candidate c;
      c.valid = true;
      c.feature = feature;
      c.threshold = midpoint(scratch_[i].first, scratch_[i + 1].first);
      c.purity = Purity::of(l0, l1, counts[0] - l0, counts[1] - l1);
      if (c.beats(best)) best = c;
    }
    return best;
  }

  Candidate find_best(std::size_t begin, std::size_t end, const std::array<std::uint64_t, 2>& counts) {
    const std::size_t dim = data_.feature_dim();
    const std::size_t wanted = options_.features_per_node;
    Candidate best;
    if (wanted == 0 || wanted >= dim || options_.rng == nullptr) {
      for (std::size_t f = 0; f < dim; ++f) {
        const Candidate c = best_on_feature(static_cast<int>(f), begin, end, counts);
        if (c.beats(best)) best = c;
      }
      return best;
    }
    // Lazy Fisher-Yates: visit features in random order until `wanted`
    // non-constant ones have been examined.
    order_.resize(dim);
    std::iota(order_.begin(), order_.end(), 0);
    std::size_t informative = 0;
    for (std::size_t i = 0; i < dim && informative < wanted; ++i) {
      const auto j = i + static_cast<std::size_t>(options_.rng->below(dim - i));
      std::swap(order_[i], order_[j]);
      const Candidate c = best_on_feature(static_cast<int>(order_[i]), begin, end, counts);
      if (!c.valid) continue;
      ++informative;
      if (c.beats(best)) best = c;
    }
    return best;
  }

  const Dataset& data_;
  const CartOptions& options_;
  std::vector<std::size_t> rows_;
  std::vector<TreeNode> nodes_;
  std::vector<std::pair<double, int>> scratch_;
  std::vector<std::size_t> order_;
};

}  // namespace

TreeModel grow_tree(const Dataset& data, std::vector<std::size_t> rows, const CartOptions& options) {
  if (rows.empty()) {
    throw Error(Errc::EmptyDataset, "cannot fit a tree on zero rows");
  }
  return Builder(data, options).build(std::move(rows));
}

}  // namespace detail

TreeModel fit_tree(const Dataset& train, const TreeParams& params) {
  params.validate();
  if (train.empty()) {
    throw Error(Errc::EmptyDataset, "cannot fit a tree on an empty dataset");
  }
  std::vector<std::size_t> rows(train.size());
  std::iota(rows.begin(), rows.end(), 0);
  detail::CartOptions options;
  options.max_depth = params.max_depth;
  options.min_samples_split = params.min_samples_split;
  return detail::grow_tree(train, std::move(rows), options);
}

}  // namespace bpl
