#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bitplane_lab/harness.hpp"

namespace bpl {

inline constexpr std::string_view kReportSchema = "bitplane-lab/report/1";
inline constexpr std::string_view kQualityCsvHeader = "image_id,representation,snr_db,ssim,ssim_percent";
inline constexpr std::string_view kClassificationCsvHeader =
    "extractor,classifier,representation,testing_accuracy,f1_score";

std::string quality_csv(const ExperimentReport& report);
std::string classification_csv(const ExperimentReport& report);

/// Full config echo plus all rows; deterministic for a given report (no timing).
std::string report_json(const ExperimentReport& report);
/// Throws Errc::SchemaMismatch.
ExperimentReport report_from_json(std::string_view text);
ExperimentReport load_report(const std::filesystem::path& path);

std::string timing_json(const ExperimentReport& report);

/// quality.csv, classification.csv, report.json and timing.json in out_dir
/// (created if missing). Throws Errc::IoError.
void emit_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

/// Grouped bar chart for one extractor: one group per (classifier,
/// representation) row with an accuracy bar and an F1 bar on a [0, 1] axis.
/// Bars are the only <rect> elements in the document.
std::string render_chart_svg(std::string_view extractor, const std::vector<ClassRow>& rows);

/// One chart_<extractor>.svg per extractor present in the report. Throws
/// Errc::InvalidParams when there are no classification rows, Errc::IoError.
std::vector<std::filesystem::path> emit_charts(const ExperimentReport& report,
                                               const std::filesystem::path& out_dir);

/// Writes a file in binary mode. Throws Errc::IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace bpl
