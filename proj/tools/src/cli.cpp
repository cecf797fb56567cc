#include "bitplane_lab_cli/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bitplane_lab/bitplane_lab.hpp"

namespace bpl::cli {

namespace {

struct NlmOptions {
  double h = NlmParams{}.h;
  int template_radius = NlmParams{}.template_radius;
  int search_radius = NlmParams{}.search_radius;

  void attach(CLI::App& cmd) {
    cmd.add_option("--nlm-h", h, "NLM filtering strength")->capture_default_str();
    cmd.add_option("--nlm-template", template_radius, "NLM patch radius")->capture_default_str();
    cmd.add_option("--nlm-search", search_radius, "NLM search radius")->capture_default_str();
  }
  NlmParams params() const { return {h, template_radius, search_radius}; }
};

struct Options {
  std::string root;
  std::string out;
  std::string mode = "auto";
  bool list = false;
  NlmOptions nlm;
  std::vector<std::string> reps;
  std::vector<std::string> extractors{"handcrafted"};
  std::vector<std::string> classifiers{"dt", "rf"};
  double split_frac = 0.2;
  std::uint64_t seed = 42;
  std::size_t quality_limit = 0;
  int trees = ForestParams{}.n_estimators;
  std::string report;
};

std::vector<Representation> parse_reps(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllRepresentations.begin(), kAllRepresentations.end()};
  std::vector<Representation> reps;
  for (const auto& name : names) reps.push_back(parse_representation(name));
  return reps;
}

ExperimentConfig make_config(const Options& o) {
  ExperimentConfig config;
  config.representations = parse_reps(o.reps);
  config.extractors.clear();
  for (const auto& e : o.extractors) config.extractors.push_back(Extractor::parse(e));
  config.classifiers.clear();
  for (const auto& c : o.classifiers) config.classifiers.push_back(parse_classifier(c));
  config.nlm = o.nlm.params();
  config.test_fraction = o.split_frac;
  config.seed = o.seed;
  config.forest.n_estimators = o.trees;
  config.quality_limit = o.quality_limit;
  config.normalize_and_validate();
  return config;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const auto set = ingest(o.root, parse_ingest_mode(o.mode));
  std::size_t fractured = 0;
  for (const auto& e : set.entries) fractured += e.label == kFractured ? 1 : 0;
  out << "provenance: " << to_string(set.provenance) << '\n'
      << "images: " << set.entries.size() << '\n'
      << "fractured: " << fractured << '\n'
      << "non_fractured: " << set.entries.size() - fractured << '\n';
  if (o.list) {
    out << "image_id,label,path\n";
    for (const auto& e : set.entries) {
      out << csv::escape_field(e.id) << ',' << e.label << ',' << csv::escape_field(e.path.string())
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto set = ingest(o.root, parse_ingest_mode(o.mode));
  const auto reps = parse_reps(o.reps);
  const std::size_t n = export_representations(set, reps, o.nlm.params(), o.out);
  out << "exported " << n * reps.size() << " images (" << n << " x " << reps.size()
      << " representations) to " << o.out << '\n';
  return kExitOk;
}

int cmd_quality(const Options& o, std::ostream& out) {
  const auto set = ingest(o.root, parse_ingest_mode(o.mode));
  ExperimentReport report;
  report.config = make_config(o);
  report.quality_rows = quality_table(set, report.config);
  std::error_code ec;
  std::filesystem::create_directories(o.out, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + o.out + ": " + ec.message());
  const auto path = std::filesystem::path(o.out) / "quality.csv";
  write_text_file(path, quality_csv(report));
  out << "wrote " << report.quality_rows.size() << " quality rows to " << path.string() << '\n';
  return kExitOk;
}

int cmd_run(const Options& o, std::ostream& out) {
  const auto config = make_config(o);
  const auto set = ingest(o.root, parse_ingest_mode(o.mode));
  const auto report = run_experiment(set, config);
  emit_report(report, o.out);
  const auto charts = emit_charts(report, o.out);
  out << "images: " << report.image_count << " (train " << report.split.train_size << ", test "
      << report.split.test_size << ")\n";
  out << kClassificationCsvHeader << '\n';
  const std::string table = classification_csv(report);
  out << table.substr(table.find('\n') + 1);
  out << "wrote quality.csv, classification.csv, report.json, timing.json and " << charts.size()
      << " chart(s) to " << o.out << '\n';
  return kExitOk;
}

int cmd_chart(const Options& o, std::ostream& out) {
  const auto report = load_report(o.report);
  for (const auto& path : emit_charts(report, o.out)) out << "wrote " << path.string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-plane slicing, partial denoising and fracture classification experiments",
               "bitplane-lab"};
  app.require_subcommand(1);
  Options o;

  auto* ingest_cmd = app.add_subcommand("ingest", "Scan a dataset and print a summary");
  ingest_cmd->add_option("--root", o.root, "Dataset root")->required()->check(CLI::ExistingDirectory);
  ingest_cmd->add_option("--mode", o.mode, "auto, folder or csv")->capture_default_str();
  ingest_cmd->add_flag("--list", o.list, "Print every entry as CSV");

  auto* export_cmd = app.add_subcommand("export-reps", "Write <id>__<rep>.pgm images and labels.csv");
  export_cmd->add_option("--root", o.root, "Dataset root")->required()->check(CLI::ExistingDirectory);
  export_cmd->add_option("--out", o.out, "Output directory")->required();
  export_cmd->add_option("--mode", o.mode, "auto, folder or csv")->capture_default_str();
  export_cmd->add_option("--reps", o.reps, "Representations (default: all)")->delimiter(',');
  o.nlm.attach(*export_cmd);

  auto* quality_cmd = app.add_subcommand("quality", "Write the SNR/SSIM table");
  quality_cmd->add_option("--root", o.root, "Dataset root")->required()->check(CLI::ExistingDirectory);
  quality_cmd->add_option("--out", o.out, "Output directory")->required();
  quality_cmd->add_option("--mode", o.mode, "auto, folder or csv")->capture_default_str();
  quality_cmd->add_option("--reps", o.reps, "Representations (default: all)")->delimiter(',');
  quality_cmd->add_option("--quality-limit", o.quality_limit, "Only the first N images by id (0 = all)");
  o.nlm.attach(*quality_cmd);

  auto* run_cmd = app.add_subcommand("run", "Run the full experiment and write reports and charts");
  run_cmd->add_option("--root", o.root, "Dataset root")->required()->check(CLI::ExistingDirectory);
  run_cmd->add_option("--out", o.out, "Output directory")->required();
  run_cmd->add_option("--mode", o.mode, "auto, folder or csv")->capture_default_str();
  run_cmd->add_option("--reps", o.reps, "Representations (default: all)")->delimiter(',');
  run_cmd->add_option("--extractor", o.extractors, "handcrafted or csv:PATH (repeatable)")
      ->delimiter(',')
      ->capture_default_str();
  run_cmd->add_option("--classifiers", o.classifiers, "dt, rf")->delimiter(',')->capture_default_str();
  run_cmd->add_option("--split-frac", o.split_frac, "Test fraction")->capture_default_str();
  run_cmd->add_option("--seed", o.seed, "Split seed")->capture_default_str();
  run_cmd->add_option("--trees", o.trees, "Random forest size")->capture_default_str();
  run_cmd->add_option("--quality-limit", o.quality_limit, "Quality rows for the first N images by id (0 = all)");
  o.nlm.attach(*run_cmd);

  auto* chart_cmd = app.add_subcommand("chart", "Render SVG charts from a report.json");
  chart_cmd->add_option("--report", o.report, "report.json path")->required()->check(CLI::ExistingFile);
  chart_cmd->add_option("--out", o.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(o, out);
    if (export_cmd->parsed()) return cmd_export(o, out);
    if (quality_cmd->parsed()) return cmd_quality(o, out);
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (chart_cmd->parsed()) return cmd_chart(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvalidParams ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace bpl::cli
