#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <string>
#include <optional>

#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/error.hpp"
#include "bitplane_lab/harness.hpp"

namespace bpl {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kManifestNames[] = {"manifest.csv", "dataset.csv"};

bool is_image_file(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm" || ext == ".png";
}

std::optional<fs::path> find_manifest(const fs::path& root) {
  for (const auto name : kManifestNames) {
    const fs::path candidate = root / name;
    if (fs::is_regular_file(candidate)) return candidate;
  }
  return std::nullopt;
}

bool has_label_folders(const fs::path& root) {
  return fs::is_directory(root / kFracturedDir) || fs::is_directory(root / kNonFracturedDir);
}

void sort_and_check(LabeledImageSet& set) {
  std::sort(set.entries.begin(), set.entries.end(),
            [](const ImageEntry& a, const ImageEntry& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < set.entries.size(); ++i) {
    if (set.entries[i].id == set.entries[i - 1].id) {
      throw Error(Errc::DuplicateId, set.entries[i].id);
    }
  }
}

LabeledImageSet ingest_folders(const fs::path& root) {
  LabeledImageSet set{root, Provenance::FolderLayout, {}};
  const std::pair<std::string_view, int> folders[] = {{kFracturedDir, 1}, {kNonFracturedDir, 0}};
  for (const auto& [name, label] : folders) {
    const fs::path dir = root / name;
    if (!fs::is_directory(dir)) continue;
    for (const auto& item : fs::directory_iterator(dir)) {
      if (!item.is_regular_file() || !is_image_file(item.path())) continue;
      set.entries.push_back({item.path().stem().string(), item.path(), label});
    }
  }
  sort_and_check(set);
  return set;
}

std::optional<fs::path> locate_by_id(const fs::path& root, const std::string& id, int label) {
  const fs::path dirs[] = {root / (label == 1 ? kFracturedDir : kNonFracturedDir), root,
                           root / "images" / (label == 1 ? kFracturedDir : kNonFracturedDir),
                           root / "images"};
  const fs::path name(id);
  for (const auto& dir : dirs) {
    if (name.has_extension() && fs::is_regular_file(dir / name)) return dir / name;
    for (const char* ext : {".pgm", ".png"}) {
      const fs::path candidate = dir / fs::path(name).replace_extension(ext);
      if (fs::is_regular_file(candidate)) return candidate;
    }
  }
  return std::nullopt;
}

LabeledImageSet ingest_manifest(const fs::path& root, const fs::path& manifest) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + manifest.string());
  std::vector<std::string> fields;
  if (!csv::next_record(in, fields)) {
    throw Error(Errc::SchemaMismatch, manifest.string() + " is empty");
  }
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < fields.size(); ++i) column.emplace(fields[i], i);
  if (!column.contains("image_id") || !column.contains("fractured")) {
    throw Error(Errc::SchemaMismatch, manifest.string() + " needs image_id and fractured columns");
  }
  const std::size_t id_col = column["image_id"];
  const std::size_t label_col = column["fractured"];
  const bool has_path = column.contains("path");
  const std::size_t path_col = has_path ? column["path"] : 0;

  LabeledImageSet set{root, Provenance::ManifestCsv, {}};
  std::size_t line = 1;
  while (csv::next_record(in, fields)) {
    ++line;
    const std::size_t needed = std::max({id_col, label_col, path_col}) + 1;
    if (fields.size() < needed) {
      throw Error(Errc::SchemaMismatch, manifest.string() + " line " + std::to_string(line) +
                                            " is missing columns");
    }
    const std::string& id = fields[id_col];
    const std::string& flag = fields[label_col];
    if (flag != "0" && flag != "1") {
      throw Error(Errc::SchemaMismatch, manifest.string() + " line " + std::to_string(line) +
                                            ": fractured must be 0 or 1");
    }
    const int label = flag == "1" ? 1 : 0;
    // Ids may carry a file extension; entries are keyed by stem.
    const std::string key = fs::path(id).stem().string();
    std::optional<fs::path> path;
    if (has_path && !fields[path_col].empty()) {
      path = root / fields[path_col];
      if (!fs::is_regular_file(*path)) {
        throw Error(Errc::MissingImage, id + " -> " + path->string());
      }
    } else {
      path = locate_by_id(root, id, label);
      if (!path) throw Error(Errc::MissingImage, id);
    }
    set.entries.push_back({key, *path, label});
  }
  sort_and_check(set);
  return set;
}

}  // namespace

std::string_view to_string(Provenance provenance) noexcept {
  return provenance == Provenance::FolderLayout ? "folder" : "csv";
}

IngestMode parse_ingest_mode(std::string_view name) {
  if (name == "auto") return IngestMode::Auto;
  if (name == "folder") return IngestMode::Folder;
  if (name == "csv") return IngestMode::Csv;
  throw Error(Errc::InvalidParams, "unknown ingest mode '" + std::string(name) + "'");
}

LabeledImageSet ingest(const fs::path& root, IngestMode mode) {
  if (!fs::is_directory(root)) throw Error(Errc::FileNotFound, root.string());
  const auto manifest = find_manifest(root);
  switch (mode) {
    case IngestMode::Csv:
      if (!manifest) throw Error(Errc::LayoutNotRecognized, "no manifest.csv or dataset.csv in " + root.string());
      return ingest_manifest(root, *manifest);
    case IngestMode::Folder:
      if (!has_label_folders(root)) {
        throw Error(Errc::LayoutNotRecognized, "no Fractured/ or Non_fractured/ in " + root.string());
      }
      return ingest_folders(root);
    case IngestMode::Auto:
      if (manifest) return ingest_manifest(root, *manifest);
      if (has_label_folders(root)) return ingest_folders(root);
      break;
  }
  throw Error(Errc::LayoutNotRecognized,
              "no manifest.csv, dataset.csv, Fractured/ or Non_fractured/ in " + root.string());
}

}  // namespace bpl
