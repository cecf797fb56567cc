#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "bitplane_lab/bitplane.hpp"
#include "bitplane_lab/dataset.hpp"
#include "bitplane_lab/error.hpp"
#include "bitplane_lab/feature_table.hpp"
#include "bitplane_lab/features.hpp"
#include "bitplane_lab/harness.hpp"
#include "bitplane_lab/parallel.hpp"
#include "bitplane_lab/report.hpp"

namespace bpl {

namespace fs = std::filesystem;

std::string_view to_string(Representation rep) noexcept {
  switch (rep) {
    case Representation::Original: return "original";
    case Representation::Msb4: return "msb4";
    case Representation::Lsb4: return "lsb4";
    case Representation::FullDenoised: return "full_denoised";
    case Representation::PartialDenoised: return "partial_denoised";
  }
  return "unknown";
}

Representation parse_representation(std::string_view name) {
  for (const auto rep : kAllRepresentations) {
    if (to_string(rep) == name) return rep;
  }
  throw Error(Errc::InvalidParams, "unknown representation '" + std::string(name) + "'");
}

GrayImage build_representation(const GrayImage& img, Representation rep, const NlmParams& nlm) {
  switch (rep) {
    case Representation::Original: return img;
    case Representation::Msb4: return recompose(slice(img), masks::kMsb4);
    case Representation::Lsb4: return recompose(slice(img), masks::kLsb4);
    case Representation::FullDenoised: return denoise_full(img, nlm);
    case Representation::PartialDenoised: return denoise_partial(img, nlm);
  }
  throw Error(Errc::InvalidParams, "unknown representation");
}

std::string_view to_string(ClassifierKind kind) noexcept {
  return kind == ClassifierKind::DecisionTree ? "decision_tree" : "random_forest";
}

ClassifierKind parse_classifier(std::string_view name) {
  if (name == "decision_tree" || name == "dt") return ClassifierKind::DecisionTree;
  if (name == "random_forest" || name == "rf") return ClassifierKind::RandomForest;
  throw Error(Errc::InvalidParams, "unknown classifier '" + std::string(name) + "'");
}

std::string_view Extractor::name() const noexcept {
  return kind == Kind::Handcrafted ? "handcrafted" : "external";
}

std::string Extractor::spec() const {
  return kind == Kind::Handcrafted ? "handcrafted" : "csv:" + csv_path.string();
}

Extractor Extractor::parse(std::string_view text) {
  if (text == "handcrafted") return handcrafted();
  if (text.starts_with("csv:") && text.size() > 4) return external_csv(fs::path(text.substr(4)));
  throw Error(Errc::InvalidParams, "extractor must be 'handcrafted' or 'csv:PATH', got '" +
                                       std::string(text) + "'");
}

void ExperimentConfig::normalize_and_validate() {
  if (representations.empty() || extractors.empty() || classifiers.empty()) {
    throw Error(Errc::InvalidParams, "representations, extractors and classifiers must be non-empty");
  }
  std::sort(representations.begin(), representations.end());
  representations.erase(std::unique(representations.begin(), representations.end()),
                        representations.end());
  std::sort(classifiers.begin(), classifiers.end());
  classifiers.erase(std::unique(classifiers.begin(), classifiers.end()), classifiers.end());
  for (std::size_t i = 0; i < extractors.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (extractors[i].name() == extractors[j].name()) {
        throw Error(Errc::InvalidParams, "extractor '" + std::string(extractors[i].name()) +
                                             "' configured twice");
      }
    }
  }
  nlm.validate();
  ssim.validate();
  tree.validate();
  forest.validate();
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(Errc::InvalidParams, "test fraction must lie in (0, 1)");
  }
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string describe(const ImageEntry& entry, Representation rep) {
  return entry.id + " (" + std::string(to_string(rep)) + ")";
}

// Per-image products of the representation stage.
struct ImageResult {
  std::vector<QualityRow> quality;
  std::map<Representation, FeatureVector> handcrafted;
};

bool wants_handcrafted(const ExperimentConfig& config) {
  return std::any_of(config.extractors.begin(), config.extractors.end(), [](const Extractor& e) {
    return e.kind == Extractor::Kind::Handcrafted;
  });
}

ImageResult process_image(const ImageEntry& entry, const ExperimentConfig& config,
                          bool with_quality) {
  ImageResult result;
  const GrayImage original = load_image(entry.path);
  const bool handcrafted = wants_handcrafted(config);
  if (with_quality) {
    result.quality.push_back({entry.id, Representation::Original, snr_db(original, original),
                              ssim(original, original, config.ssim)});
  }
  for (const auto rep : config.representations) {
    if (!handcrafted && !(with_quality && rep != Representation::Original)) continue;
    const GrayImage image = build_representation(original, rep, config.nlm);
    if (with_quality && rep != Representation::Original) {
      result.quality.push_back(
          {entry.id, rep, snr_db(original, image), ssim(original, image, config.ssim)});
    }
    if (handcrafted) {
      try {
        result.handcrafted.emplace(rep, handcrafted_features(image));
      } catch (const Error& e) {
        throw Error(e.code(), describe(entry, rep) + ": " + e.message());
      }
    }
  }
  return result;
}

using FeatureKey = std::pair<std::string, std::string>;

std::map<FeatureKey, const FeatureVector*> index_table(const FeatureTable& table) {
  std::map<FeatureKey, const FeatureVector*> index;
  for (const auto& row : table.rows) {
    if (!index.emplace(FeatureKey{row.image_id, row.representation}, &row.features).second) {
      throw Error(Errc::DuplicateId, "feature CSV repeats (" + row.image_id + ", " +
                                         row.representation + ")");
    }
  }
  return index;
}

EvalReport fit_and_evaluate(ClassifierKind kind, const Dataset& train, const Dataset& test,
                            const ExperimentConfig& config) {
  if (kind == ClassifierKind::DecisionTree) {
    return evaluate(fit_tree(train, config.tree), test);
  }
  return evaluate(fit_forest(train, config.forest), test);
}

}  // namespace

std::vector<QualityRow> quality_table(const LabeledImageSet& set, const ExperimentConfig& config) {
  ExperimentConfig quality_only = config;
  quality_only.extractors = {Extractor::external_csv("-")};
  quality_only.normalize_and_validate();
  const std::size_t n = config.quality_limit == 0
                            ? set.entries.size()
                            : std::min(config.quality_limit, set.entries.size());
  std::vector<std::vector<QualityRow>> per_image(n);
  parallel_for(n, [&](std::size_t i) {
    per_image[i] = process_image(set.entries[i], quality_only, true).quality;
  });
  std::vector<QualityRow> rows;
  for (auto& chunk : per_image) rows.insert(rows.end(), chunk.begin(), chunk.end());
  return rows;
}

ExperimentReport run_experiment(const LabeledImageSet& set, ExperimentConfig config) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.timing.started_utc = utc_now();
  config.normalize_and_validate();

  const auto& entries = set.entries;
  const std::size_t n = entries.size();
  if (n == 0) throw Error(Errc::EmptyDataset, "image set is empty");

  // External tables are loaded and checked before any image work starts.
  std::vector<std::optional<std::map<FeatureKey, const FeatureVector*>>> external_index(
      config.extractors.size());
  std::vector<FeatureTable> external_tables(config.extractors.size());
  for (std::size_t e = 0; e < config.extractors.size(); ++e) {
    const auto& extractor = config.extractors[e];
    if (extractor.kind != Extractor::Kind::ExternalCsv) continue;
    external_tables[e] = load_external_features(extractor.csv_path);
    external_index[e] = index_table(external_tables[e]);
    for (const auto& entry : entries) {
      for (const auto rep : config.representations) {
        const FeatureKey key{entry.id, std::string(to_string(rep))};
        if (!external_index[e]->contains(key)) {
          throw Error(Errc::FeatureJoinMismatch, extractor.csv_path.string() + " has no row for " +
                                                     describe(entry, rep));
        }
      }
    }
  }

  const std::size_t quality_n =
      config.quality_limit == 0 ? n : std::min(config.quality_limit, n);
  std::vector<ImageResult> results(n);
  parallel_for(n, [&](std::size_t i) { results[i] = process_image(entries[i], config, i < quality_n); });

  report.config = config;
  report.dataset_root = set.root.string();
  report.image_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    report.fractured_count += entries[i].label == kFractured ? 1 : 0;
    report.quality_rows.insert(report.quality_rows.end(), results[i].quality.begin(),
                               results[i].quality.end());
  }

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = entries[i].label;
  const std::vector<bool> is_test = stratified_test_mask(labels, config.test_fraction, config.seed);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_test[i]) report.split.test_ids.push_back(entries[i].id);
  }
  report.split.test_size = report.split.test_ids.size();
  report.split.train_size = n - report.split.test_size;

  for (std::size_t e = 0; e < config.extractors.size(); ++e) {
    const auto& extractor = config.extractors[e];
    std::vector<TrainTestSplit> splits;
    for (const auto rep : config.representations) {
      TrainTestSplit split;
      for (std::size_t i = 0; i < n; ++i) {
        const FeatureVector& features =
            external_index[e]
                ? *external_index[e]->at(FeatureKey{entries[i].id, std::string(to_string(rep))})
                : results[i].handcrafted.at(rep);
        (is_test[i] ? split.test : split.train).add({entries[i].id, features, entries[i].label});
      }
      splits.push_back(std::move(split));
    }
    for (const auto kind : config.classifiers) {
      for (std::size_t r = 0; r < config.representations.size(); ++r) {
        report.class_rows.push_back({std::string(extractor.name()), kind,
                                     config.representations[r],
                                     fit_and_evaluate(kind, splits[r].train, splits[r].test, config)});
      }
    }
  }

  report.timing.finished_utc = utc_now();
  report.timing.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::size_t export_representations(const LabeledImageSet& set,
                                   const std::vector<Representation>& reps, const NlmParams& nlm,
                                   const fs::path& out_dir) {
  nlm.validate();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + out_dir.string() + ": " + ec.message());

  parallel_for(set.entries.size(), [&](std::size_t i) {
    const auto& entry = set.entries[i];
    const GrayImage original = load_image(entry.path);
    for (const auto rep : reps) {
      save_image(build_representation(original, rep, nlm),
                 out_dir / (entry.id + "__" + std::string(to_string(rep)) + ".pgm"));
    }
  });

  std::ostringstream labels;
  labels << "image_id,label\n";
  for (const auto& entry : set.entries) labels << entry.id << ',' << entry.label << '\n';
  write_text_file(out_dir / "labels.csv", labels.str());
  return set.entries.size();
}

}  // namespace bpl
