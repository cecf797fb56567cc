#include "bitplane_lab/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/error.hpp"

namespace bpl {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json number(double value) {
  if (std::isfinite(value)) return value;
  return csv::format_number(value);
}

double read_number(const json& value) {
  if (value.is_string()) return csv::parse_number(value.get<std::string>());
  return value.get<double>();
}

json optional_int(const std::optional<int>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<int> read_optional_int(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<int>();
}

std::string_view to_string(FeaturesPerSplit::Kind kind) {
  switch (kind) {
    case FeaturesPerSplit::Kind::Sqrt: return "sqrt";
    case FeaturesPerSplit::Kind::All: return "all";
    case FeaturesPerSplit::Kind::Fixed: return "fixed";
  }
  return "sqrt";
}

FeaturesPerSplit::Kind parse_fps_kind(const std::string& name) {
  if (name == "sqrt") return FeaturesPerSplit::Kind::Sqrt;
  if (name == "all") return FeaturesPerSplit::Kind::All;
  if (name == "fixed") return FeaturesPerSplit::Kind::Fixed;
  throw Error(Errc::SchemaMismatch, "unknown features_per_split kind '" + name + "'");
}

json config_json(const ExperimentConfig& config) {
  json reps = json::array();
  for (const auto rep : config.representations) reps.push_back(to_string(rep));
  json extractors = json::array();
  for (const auto& e : config.extractors) extractors.push_back(e.spec());
  json classifiers = json::array();
  for (const auto kind : config.classifiers) classifiers.push_back(to_string(kind));

  json window;
  if (const auto* sliding = std::get_if<SlidingWindow>(&config.ssim.window)) {
    window = {{"kind", "sliding"}, {"side", sliding->side},
              {"gaussian_sigma", sliding->gaussian_sigma}};
  } else {
    window = {{"kind", "global"}};
  }

  return {
      {"representations", reps},
      {"extractors", extractors},
      {"classifiers", classifiers},
      {"nlm",
       {{"h", config.nlm.h},
        {"template_radius", config.nlm.template_radius},
        {"search_radius", config.nlm.search_radius}}},
      {"ssim",
       {{"k1", config.ssim.k1},
        {"k2", config.ssim.k2},
        {"dynamic_range", config.ssim.dynamic_range},
        {"window", window}}},
      {"test_fraction", config.test_fraction},
      {"seed", config.seed},
      {"tree",
       {{"max_depth", optional_int(config.tree.max_depth)},
        {"min_samples_split", config.tree.min_samples_split},
        {"rng_seed", config.tree.rng_seed}}},
      {"forest",
       {{"n_estimators", config.forest.n_estimators},
        {"features_per_split",
         {{"kind", to_string(config.forest.features_per_split.kind)},
          {"count", config.forest.features_per_split.count}}},
        {"bootstrap", config.forest.bootstrap},
        {"rng_seed", config.forest.rng_seed},
        {"max_depth", optional_int(config.forest.max_depth)},
        {"min_samples_split", config.forest.min_samples_split}}},
      {"quality_limit", config.quality_limit},
  };
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig config;
  config.representations.clear();
  for (const auto& r : j.at("representations")) {
    config.representations.push_back(parse_representation(r.get<std::string>()));
  }
  config.extractors.clear();
  for (const auto& e : j.at("extractors")) config.extractors.push_back(Extractor::parse(e.get<std::string>()));
  config.classifiers.clear();
  for (const auto& c : j.at("classifiers")) config.classifiers.push_back(parse_classifier(c.get<std::string>()));

  const auto& nlm = j.at("nlm");
  config.nlm = {nlm.at("h").get<double>(), nlm.at("template_radius").get<int>(),
                nlm.at("search_radius").get<int>()};

  const auto& ssim = j.at("ssim");
  config.ssim.k1 = ssim.at("k1").get<double>();
  config.ssim.k2 = ssim.at("k2").get<double>();
  config.ssim.dynamic_range = ssim.at("dynamic_range").get<double>();
  const auto& window = ssim.at("window");
  const auto kind = window.at("kind").get<std::string>();
  if (kind == "sliding") {
    config.ssim.window =
        SlidingWindow{window.at("side").get<int>(), window.at("gaussian_sigma").get<double>()};
  } else if (kind == "global") {
    config.ssim.window = GlobalWindow{};
  } else {
    throw Error(Errc::SchemaMismatch, "unknown SSIM window kind '" + kind + "'");
  }

  config.test_fraction = j.at("test_fraction").get<double>();
  config.seed = j.at("seed").get<std::uint64_t>();

  const auto& tree = j.at("tree");
  config.tree.max_depth = read_optional_int(tree.at("max_depth"));
  config.tree.min_samples_split = tree.at("min_samples_split").get<int>();
  config.tree.rng_seed = tree.at("rng_seed").get<std::uint64_t>();

  const auto& forest = j.at("forest");
  config.forest.n_estimators = forest.at("n_estimators").get<int>();
  const auto& fps = forest.at("features_per_split");
  config.forest.features_per_split = {parse_fps_kind(fps.at("kind").get<std::string>()),
                                      fps.at("count").get<int>()};
  config.forest.bootstrap = forest.at("bootstrap").get<bool>();
  config.forest.rng_seed = forest.at("rng_seed").get<std::uint64_t>();
  config.forest.max_depth = read_optional_int(forest.at("max_depth"));
  config.forest.min_samples_split = forest.at("min_samples_split").get<int>();

  config.quality_limit = j.at("quality_limit").get<std::size_t>();
  return config;
}

}  // namespace

std::string quality_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kQualityCsvHeader << '\n';
  for (const auto& row : report.quality_rows) {
    out << csv::escape_field(row.image_id) << ',' << to_string(row.representation) << ','
        << csv::format_number(row.snr_db) << ',' << csv::format_number(row.ssim) << ','
        << csv::format_number(row.ssim * 100.0) << '\n';
  }
  return out.str();
}

std::string classification_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kClassificationCsvHeader << '\n';
  for (const auto& row : report.class_rows) {
    out << csv::escape_field(row.extractor) << ',' << to_string(row.classifier) << ','
        << to_string(row.representation) << ',' << csv::format_number(row.eval.accuracy) << ','
        << csv::format_number(row.eval.f1) << '\n';
  }
  return out.str();
}

std::string report_json(const ExperimentReport& report) {
  json quality = json::array();
  for (const auto& row : report.quality_rows) {
    quality.push_back({{"image_id", row.image_id},
                       {"representation", to_string(row.representation)},
                       {"snr_db", number(row.snr_db)},
                       {"ssim", number(row.ssim)}});
  }
  json classification = json::array();
  for (const auto& row : report.class_rows) {
    const auto& c = row.eval.confusion;
    classification.push_back({{"extractor", row.extractor},
                              {"classifier", to_string(row.classifier)},
                              {"representation", to_string(row.representation)},
                              {"testing_accuracy", number(row.eval.accuracy)},
                              {"f1_score", number(row.eval.f1)},
                              {"confusion", {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}}}});
  }
  const json doc = {
      {"schema", kReportSchema},
      {"config", config_json(report.config)},
      {"conventions",
       {{"f1_average", "binary"},
        {"positive_class", "fractured"},
        {"positive_label", kFractured},
        {"snr_identical_images", "inf"}}},
      {"dataset",
       {{"root", report.dataset_root},
        {"images", report.image_count},
        {"fractured", report.fractured_count},
        {"non_fractured", report.image_count - report.fractured_count}}},
      {"split",
       {{"train_size", report.split.train_size},
        {"test_size", report.split.test_size},
        {"test_ids", report.split.test_ids}}},
      {"quality", quality},
      {"classification", classification},
  };
  return doc.dump(2) + "\n";
}

ExperimentReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_object() || doc.value("schema", std::string()) != kReportSchema) {
      throw Error(Errc::SchemaMismatch, "not a " + std::string(kReportSchema) + " document");
    }
    ExperimentReport report;
    report.config = config_from_json(doc.at("config"));
    const auto& dataset = doc.at("dataset");
    report.dataset_root = dataset.at("root").get<std::string>();
    report.image_count = dataset.at("images").get<std::size_t>();
    report.fractured_count = dataset.at("fractured").get<std::size_t>();
    const auto& split = doc.at("split");
    report.split.train_size = split.at("train_size").get<std::size_t>();
    report.split.test_size = split.at("test_size").get<std::size_t>();
    report.split.test_ids = split.at("test_ids").get<std::vector<std::string>>();
    for (const auto& row : doc.at("quality")) {
      report.quality_rows.push_back(
          {row.at("image_id").get<std::string>(),
           parse_representation(row.at("representation").get<std::string>()),
           read_number(row.at("snr_db")), read_number(row.at("ssim"))});
    }
    for (const auto& row : doc.at("classification")) {
      ClassRow out;
      out.extractor = row.at("extractor").get<std::string>();
      out.classifier = parse_classifier(row.at("classifier").get<std::string>());
      out.representation = parse_representation(row.at("representation").get<std::string>());
      out.eval.accuracy = read_number(row.at("testing_accuracy"));
      out.eval.f1 = read_number(row.at("f1_score"));
      const auto& c = row.at("confusion");
      out.eval.confusion = {c.at("tp").get<std::uint64_t>(), c.at("fp").get<std::uint64_t>(),
                            c.at("fn").get<std::uint64_t>(), c.at("tn").get<std::uint64_t>()};
      report.class_rows.push_back(std::move(out));
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaMismatch, std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaMismatch) throw;
    throw Error(Errc::SchemaMismatch, "malformed report: " + e.message());
  }
}

ExperimentReport load_report(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return report_from_json(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

std::string timing_json(const ExperimentReport& report) {
  const json doc = {{"started_utc", report.timing.started_utc},
                    {"finished_utc", report.timing.finished_utc},
                    {"seconds", report.timing.seconds}};
  return doc.dump(2) + "\n";
}

void write_text_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

void emit_report(const ExperimentReport& report, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  write_text_file(out_dir / "quality.csv", quality_csv(report));
  write_text_file(out_dir / "classification.csv", classification_csv(report));
  write_text_file(out_dir / "report.json", report_json(report));
  write_text_file(out_dir / "timing.json", timing_json(report));
}

}  // namespace bpl
