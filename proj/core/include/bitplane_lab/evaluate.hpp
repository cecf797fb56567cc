#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "bitplane_lab/dataset.hpp"
#include "bitplane_lab/forest.hpp"
#include "bitplane_lab/tree.hpp"

namespace bpl {

struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const noexcept { return tp + fp + fn + tn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

/// Binary scores with fractured (1) as the positive class.
struct EvalReport {
  double accuracy = 0.0;
  double f1 = 0.0;
  Confusion confusion;
};

/// accuracy = (tp + tn) / total, f1 = 2tp / (2tp + fp + fn) or 0 when that
/// denominator is 0.
EvalReport score(const Confusion& confusion);

using Predictor = std::function<int(std::span<const double>)>;

/// Throws Errc::EmptyDataset on an empty test set.
EvalReport evaluate(const Predictor& predict, const Dataset& test);
EvalReport evaluate(const TreeModel& model, const Dataset& test);
EvalReport evaluate(const ForestModel& model, const Dataset& test);

}  // namespace bpl
