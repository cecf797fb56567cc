#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bitplane_lab/features.hpp"

namespace bpl {

/// Externally computed feature vectors keyed by (image id, representation).
/// CSV layout: header "image_id,representation,label,f0,...,f{d-1}", one row
/// per image and representation.
struct FeatureTable {
  struct Row {
    std::string image_id;
    std::string representation;
    int label = 0;
    FeatureVector features;
  };

  std::size_t feature_dim = 0;
  std::vector<Row> rows;
};

/// Throws Errc::FileNotFound, Errc::SchemaMismatch (header, label or number
/// format) or Errc::RaggedRows (row width differs from the header).
FeatureTable load_external_features(const std::filesystem::path& path);
FeatureTable read_external_features(std::istream& in);

/// Full-precision writer for the same layout. Throws Errc::IoError.
void save_external_features(const FeatureTable& table, const std::filesystem::path& path);
void write_external_features(const FeatureTable& table, std::ostream& out);

}  // namespace bpl
