#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitplane_lab/denoise.hpp"
#include "bitplane_lab/evaluate.hpp"
#include "bitplane_lab/forest.hpp"
#include "bitplane_lab/image.hpp"
#include "bitplane_lab/metrics.hpp"
#include "bitplane_lab/tree.hpp"

namespace bpl {

// ---------------------------------------------------------------------------
// Representations

enum class Representation { Original, Msb4, Lsb4, FullDenoised, PartialDenoised };

inline constexpr std::array<Representation, 5> kAllRepresentations = {
    Representation::Original, Representation::Msb4, Representation::Lsb4,
    Representation::FullDenoised, Representation::PartialDenoised};

/// "original", "msb4", "lsb4", "full_denoised", "partial_denoised".
std::string_view to_string(Representation rep) noexcept;
/// Throws Errc::InvalidParams for an unknown name.
Representation parse_representation(std::string_view name);

GrayImage build_representation(const GrayImage& img, Representation rep,
                               const NlmParams& nlm = {});

// ---------------------------------------------------------------------------
// Dataset ingestion

struct ImageEntry {
  std::string id;
  std::filesystem::path path;
  int label = 0;
};

enum class Provenance { FolderLayout, ManifestCsv };
enum class IngestMode { Auto, Folder, Csv };

struct LabeledImageSet {
  std::filesystem::path root;
  Provenance provenance = Provenance::FolderLayout;
  std::vector<ImageEntry> entries;  // sorted by id
};

inline constexpr std::string_view kFracturedDir = "Fractured";
inline constexpr std::string_view kNonFracturedDir = "Non_fractured";

/// Folder layout: <root>/Fractured/* (label 1) and <root>/Non_fractured/*
/// (label 0), ids are file stems. Manifest: <root>/manifest.csv or
/// <root>/dataset.csv with columns image_id, fractured and optionally path
/// (relative to root); without a path column the image is looked up by id
/// under the label folders. Auto prefers a manifest when one exists.
///
/// Throws Errc::FileNotFound (root), Errc::LayoutNotRecognized,
/// Errc::MissingImage, Errc::DuplicateId or Errc::SchemaMismatch.
LabeledImageSet ingest(const std::filesystem::path& root, IngestMode mode = IngestMode::Auto);

IngestMode parse_ingest_mode(std::string_view name);
std::string_view to_string(Provenance provenance) noexcept;

// ---------------------------------------------------------------------------
// Experiment configuration and results

enum class ClassifierKind { DecisionTree, RandomForest };

/// "decision_tree", "random_forest"; parse also accepts "dt" and "rf".
std::string_view to_string(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier(std::string_view name);

struct Extractor {
  enum class Kind { Handcrafted, ExternalCsv };
  Kind kind = Kind::Handcrafted;
  std::filesystem::path csv_path;

  static Extractor handcrafted() { return {}; }
  static Extractor external_csv(std::filesystem::path path) {
    return {Kind::ExternalCsv, std::move(path)};
  }

  /// "handcrafted" or "external".
  std::string_view name() const noexcept;
  /// "handcrafted" or "csv:<path>".
  std::string spec() const;
  /// Inverse of spec(). Throws Errc::InvalidParams.
  static Extractor parse(std::string_view text);
};

struct ExperimentConfig {
  std::vector<Representation> representations{kAllRepresentations.begin(),
                                              kAllRepresentations.end()};
  std::vector<Extractor> extractors{Extractor::handcrafted()};
  std::vector<ClassifierKind> classifiers{ClassifierKind::DecisionTree,
                                          ClassifierKind::RandomForest};
  NlmParams nlm;
  SsimParams ssim;
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  TreeParams tree;
  ForestParams forest;
  /// Quality rows are produced for the first N images by id; 0 means all.
  std::size_t quality_limit = 0;

  /// Sorts and de-duplicates the sets. Throws Errc::InvalidParams on empty sets
  /// or invalid nested parameters.
  void normalize_and_validate();
};

struct QualityRow {
  std::string image_id;
  Representation representation = Representation::Original;
  double snr_db = 0.0;
  double ssim = 0.0;
};

struct ClassRow {
  std::string extractor;
  ClassifierKind classifier = ClassifierKind::DecisionTree;
  Representation representation = Representation::Original;
  EvalReport eval;
};

struct SplitSummary {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::vector<std::string> test_ids;  // in id order
};

struct Timing {
  std::string started_utc;
  std::string finished_utc;
  double seconds = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string dataset_root;
  std::size_t image_count = 0;
  std::size_t fractured_count = 0;
  SplitSummary split;
  std::vector<QualityRow> quality_rows;
  std::vector<ClassRow> class_rows;
  Timing timing;  // timing.json only
};

/// For each image (first `config.quality_limit` when set) an Original row
/// (snr +inf, ssim 1) and one row per other configured representation, scored
/// against the original image. Rows are ordered by id, then representation.
std::vector<QualityRow> quality_table(const LabeledImageSet& set, const ExperimentConfig& config);

/// Builds features for every (extractor, representation), splits the image ids
/// once, and fits/evaluates every classifier on that shared partition. Rows are
/// ordered by extractor (as configured), classifier, representation.
///
/// Throws Errc::FeatureJoinMismatch when an external table lacks an
/// (id, representation) pair, plus anything raised by the stages.
ExperimentReport run_experiment(const LabeledImageSet& set, ExperimentConfig config);

/// Writes <out>/<id>__<rep>.pgm for each image and representation plus
/// <out>/labels.csv (image_id,label). Returns the number of images written.
std::size_t export_representations(const LabeledImageSet& set,
                                   const std::vector<Representation>& reps,
                                   const NlmParams& nlm, const std::filesystem::path& out_dir);

}  // namespace bpl
