#include "bitplane_lab/evaluate.hpp"

#include "bitplane_lab/error.hpp"

namespace bpl {

EvalReport score(const Confusion& confusion) {
  EvalReport report;
  report.confusion = confusion;
  const std::uint64_t total = confusion.total();
  if (total > 0) {
    report.accuracy =
        static_cast<double>(confusion.tp + confusion.tn) / static_cast<double>(total);
  }
  const std::uint64_t f1_den = 2 * confusion.tp + confusion.fp + confusion.fn;
  if (f1_den > 0) {
    report.f1 = static_cast<double>(2 * confusion.tp) / static_cast<double>(f1_den);
  }
  return report;
}

EvalReport evaluate(const Predictor& predict, const Dataset& test) {
  if (test.empty()) {
    throw Error(Errc::EmptyDataset, "cannot evaluate on an empty test set");
  }
  Confusion confusion;
  for (const auto& row : test.rows()) {
    const bool predicted = predict(row.features) == kFractured;
    const bool actual = row.label == kFractured;
    if (predicted && actual) {
      ++confusion.tp;
    } else if (predicted) {
      ++confusion.fp;
    } else if (actual) {
      ++confusion.fn;
    } else {
      ++confusion.tn;
    }
  }
  return score(confusion);
}

EvalReport evaluate(const TreeModel& model, const Dataset& test) {
  return evaluate([&](std::span<const double> x) { return model.predict(x); }, test);
}

EvalReport evaluate(const ForestModel& model, const Dataset& test) {
  return evaluate([&](std::span<const double> x) { return model.predict(x); }, test);
}

}  // namespace bpl
