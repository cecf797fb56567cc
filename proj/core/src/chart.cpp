#include <algorithm>
#include <sstream>
#include <string>

#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/error.hpp"
#include "bitplane_lab/report.hpp"

namespace bpl {

namespace fs = std::filesystem;

namespace {

constexpr int kLeft = 60;
constexpr int kTop = 40;
constexpr int kPlotHeight = 240;
constexpr int kBarWidth = 18;
constexpr int kGroupWidth = 56;
constexpr int kBottom = 110;
constexpr const char* kAccuracyColor = "#4c72b0";
constexpr const char* kF1Color = "#dd8452";

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Pixel coordinates are kept to 2 decimals so output is stable across libcs.
std::string px(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::string render_chart_svg(std::string_view extractor, const std::vector<ClassRow>& rows) {
  const int plot_width = std::max<int>(1, static_cast<int>(rows.size())) * kGroupWidth;
  const int width = kLeft + plot_width + 140;
  const int height = kTop + kPlotHeight + kBottom;
  const int base = kTop + kPlotHeight;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<title>" << xml_escape(extractor) << " features: testing accuracy and F1</title>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">" << xml_escape(extractor)
      << " features</text>\n";

  for (int tick = 0; tick <= 10; tick += 2) {
    const double y = base - kPlotHeight * tick / 10.0;
    svg << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << px(y) << "\" x2=\"" << kLeft + plot_width
        << "\" y2=\"" << px(y) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << px(y + 4) << "\" text-anchor=\"end\">"
        << csv::format_number(tick / 10.0) << "</text>\n";
  }
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << base
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << base << "\" x2=\"" << kLeft + plot_width
      << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const double x0 = kLeft + static_cast<double>(i) * kGroupWidth + (kGroupWidth - 2 * kBarWidth) / 2.0;
    const double values[2] = {clamp_unit(row.eval.accuracy), clamp_unit(row.eval.f1)};
    const char* colors[2] = {kAccuracyColor, kF1Color};
    const char* names[2] = {"accuracy", "f1"};
    for (int b = 0; b < 2; ++b) {
      const double h = values[b] * kPlotHeight;
      svg << "<rect x=\"" << px(x0 + b * kBarWidth) << "\" y=\"" << px(base - h) << "\" width=\""
          << kBarWidth << "\" height=\"" << px(h) << "\" fill=\"" << colors[b] << "\"><title>"
          << to_string(row.classifier) << ' ' << to_string(row.representation) << ' ' << names[b]
          << ' ' << csv::format_number(values[b]) << "</title></rect>\n";
    }
    const double cx = x0 + kBarWidth;
    svg << "<text transform=\"translate(" << px(cx + 4) << ' ' << base + 8
        << ") rotate(60)\">" << to_string(row.classifier) << " / " << to_string(row.representation)
        << "</text>\n";
  }

  const int lx = kLeft + plot_width + 20;
  const char* legend[2][2] = {{kAccuracyColor, "testing accuracy"}, {kF1Color, "F1 score"}};
  for (int k = 0; k < 2; ++k) {
    const int ly = kTop + 10 + 20 * k;
    svg << "<path d=\"M" << lx << ' ' << ly - 10 << "h12v12h-12z\" fill=\"" << legend[k][0] << "\"/>\n";
    svg << "<text x=\"" << lx + 18 << "\" y=\"" << ly << "\">" << legend[k][1] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<fs::path> emit_charts(const ExperimentReport& report, const fs::path& out_dir) {
  if (report.class_rows.empty()) {
    throw Error(Errc::InvalidParams, "report has no classification rows to chart");
  }
  std::vector<std::string> extractors;
  for (const auto& row : report.class_rows) {
    if (std::find(extractors.begin(), extractors.end(), row.extractor) == extractors.end()) {
      extractors.push_back(row.extractor);
    }
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  for (const auto& extractor : extractors) {
    std::vector<ClassRow> rows;
    std::copy_if(report.class_rows.begin(), report.class_rows.end(), std::back_inserter(rows),
                 [&](const ClassRow& r) { return r.extractor == extractor; });
    const fs::path path = out_dir / ("chart_" + extractor + ".svg");
    write_text_file(path, render_chart_svg(extractor, rows));
    written.push_back(path);
  }
  return written;
}

}  // namespace bpl
