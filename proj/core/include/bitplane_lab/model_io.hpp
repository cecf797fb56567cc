#pragma once

#include <string>
#include <string_view>

#include "bitplane_lab/forest.hpp"
#include "bitplane_lab/tree.hpp"

namespace bpl {

inline constexpr std::string_view kTreeSchema = "bitplane-lab/tree/1";
inline constexpr std::string_view kForestSchema = "bitplane-lab/forest/1";

/// JSON documents with a "schema" field and nodes as nested objects:
/// internal {"feature", "threshold", "counts", "left", "right"}, leaf {"counts"}.
std::string tree_to_json(const TreeModel& model);
std::string forest_to_json(const ForestModel& model);

/// Throws Errc::SchemaMismatch on a wrong schema tag or malformed document.
TreeModel tree_from_json(std::string_view text);
ForestModel forest_from_json(std::string_view text);

}  // namespace bpl
