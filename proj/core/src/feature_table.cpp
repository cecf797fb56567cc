#include "bitplane_lab/feature_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/error.hpp"

namespace bpl {

namespace {

constexpr std::string_view kFixedColumns[] = {"image_id", "representation", "label"};
constexpr std::size_t kFixed = std::size(kFixedColumns);

}  // namespace

FeatureTable read_external_features(std::istream& in) {
  std::vector<std::string> fields;
  if (!csv::next_record(in, fields)) {
    throw Error(Errc::SchemaMismatch, "feature CSV is empty");
  }
  if (fields.size() <= kFixed) {
    throw Error(Errc::SchemaMismatch, "feature CSV header has no feature columns");
  }
  for (std::size_t i = 0; i < kFixed; ++i) {
    if (fields[i] != kFixedColumns[i]) {
      throw Error(Errc::SchemaMismatch, "header column " + std::to_string(i) + " is '" +
                                            fields[i] + "', expected '" +
                                            std::string(kFixedColumns[i]) + "'");
    }
  }
  FeatureTable table;
  table.feature_dim = fields.size() - kFixed;
  for (std::size_t k = 0; k < table.feature_dim; ++k) {
    if (fields[kFixed + k] != "f" + std::to_string(k)) {
      throw Error(Errc::SchemaMismatch, "header column '" + fields[kFixed + k] + "', expected 'f" +
                                            std::to_string(k) + "'");
    }
  }

  std::size_t line = 1;
  while (csv::next_record(in, fields)) {
    ++line;
    if (fields.size() != kFixed + table.feature_dim) {
      throw Error(Errc::RaggedRows, "row " + std::to_string(line) + " has " +
                                        std::to_string(fields.size() - std::min(fields.size(), kFixed)) +
                                        " feature values, header declares " +
                                        std::to_string(table.feature_dim));
    }
    FeatureTable::Row row;
    row.image_id = fields[0];
    row.representation = fields[1];
    if (fields[2] != "0" && fields[2] != "1") {
      throw Error(Errc::SchemaMismatch, "row " + std::to_string(line) + ": label '" + fields[2] +
                                            "' is not 0 or 1");
    }
    row.label = fields[2] == "1" ? 1 : 0;
    row.features.reserve(table.feature_dim);
    for (std::size_t k = 0; k < table.feature_dim; ++k) {
      const double v = csv::parse_number(fields[kFixed + k]);
      if (!std::isfinite(v)) {
        throw Error(Errc::SchemaMismatch, "row " + std::to_string(line) + ": non-finite feature");
      }
      row.features.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

FeatureTable load_external_features(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  try {
    return read_external_features(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

void write_external_features(const FeatureTable& table, std::ostream& out) {
  out << "image_id,representation,label";
  for (std::size_t k = 0; k < table.feature_dim; ++k) out << ",f" << k;
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.features.size() != table.feature_dim) {
      throw Error(Errc::RaggedRows, "row " + row.image_id + " has the wrong feature count");
    }
    out << csv::escape_field(row.image_id) << ',' << csv::escape_field(row.representation) << ','
        << row.label;
    for (const double v : row.features) out << ',' << csv::format_number(v);
    out << '\n';
  }
}

void save_external_features(const FeatureTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  write_external_features(table, out);
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

}  // namespace bpl
