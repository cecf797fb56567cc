#include "bitplane_lab/model_io.hpp"

#include <nlohmann/json.hpp>

#include <string>

#include "bitplane_lab/error.hpp"

namespace bpl {

using nlohmann::json;

namespace {

json node_to_json(const TreeModel& model, std::size_t index) {
  const auto& node = model.nodes()[index];
  json out;
  out["counts"] = {node.class_counts[0], node.class_counts[1]};
  if (!node.is_leaf()) {
    out["feature"] = node.feature;
    out["threshold"] = node.threshold;
    out["left"] = node_to_json(model, static_cast<std::size_t>(node.left));
    out["right"] = node_to_json(model, static_cast<std::size_t>(node.right));
  }
  return out;
}

// Rebuilds the flat preorder layout used by the fitter (node, left subtree,
// right subtree, with children allocated when their parent is visited).
void node_from_json(const json& j, std::size_t index, std::vector<TreeNode>& nodes) {
  const auto& counts = j.at("counts");
  if (!counts.is_array() || counts.size() != 2) {
    throw Error(Errc::SchemaMismatch, "node counts must be a 2-element array");
  }
  nodes[index].class_counts = {counts[0].get<std::uint64_t>(), counts[1].get<std::uint64_t>()};
  if (!j.contains("feature")) return;
  nodes[index].feature = j.at("feature").get<int>();
  nodes[index].threshold = j.at("threshold").get<double>();
  const std::size_t left = nodes.size();
  nodes.emplace_back();
  nodes.emplace_back();
  nodes[index].left = static_cast<std::int32_t>(left);
  nodes[index].right = static_cast<std::int32_t>(left + 1);
  node_from_json(j.at("left"), left, nodes);
  node_from_json(j.at("right"), left + 1, nodes);
}

TreeModel tree_from_root(const json& root, std::size_t feature_dim) {
  std::vector<TreeNode> nodes(1);
  node_from_json(root, 0, nodes);
  return TreeModel(std::move(nodes), feature_dim);
}

json parse_with_schema(std::string_view text, std::string_view schema) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(Errc::SchemaMismatch, "model document is not a JSON object");
  }
  if (doc.value("schema", std::string{}) != schema) {
    throw Error(Errc::SchemaMismatch, "expected schema " + std::string(schema));
  }
  return doc;
}

template <typename Fn>
auto rethrow_as_schema(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaMismatch, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidParams) throw Error(Errc::SchemaMismatch, e.message());
    throw;
  }
}

}  // namespace

std::string tree_to_json(const TreeModel& model) {
  json doc;
  doc["schema"] = kTreeSchema;
  doc["feature_dim"] = model.feature_dim();
  doc["root"] = node_to_json(model, 0);
  return doc.dump();
}

std::string forest_to_json(const ForestModel& model) {
  json doc;
  doc["schema"] = kForestSchema;
  doc["feature_dim"] = model.feature_dim();
  json trees = json::array();
  for (std::size_t i = 0; i < model.trees().size(); ++i) {
    trees.push_back({{"seed", model.tree_seeds()[i]}, {"root", node_to_json(model.trees()[i], 0)}});
  }
  doc["trees"] = std::move(trees);
  return doc.dump();
}

TreeModel tree_from_json(std::string_view text) {
  return rethrow_as_schema([&] {
    const json doc = parse_with_schema(text, kTreeSchema);
    return tree_from_root(doc.at("root"), doc.at("feature_dim").get<std::size_t>());
  });
}

ForestModel forest_from_json(std::string_view text) {
  return rethrow_as_schema([&] {
    const json doc = parse_with_schema(text, kForestSchema);
    const auto dim = doc.at("feature_dim").get<std::size_t>();
    std::vector<TreeModel> trees;
    std::vector<std::uint64_t> seeds;
    for (const auto& t : doc.at("trees")) {
      seeds.push_back(t.at("seed").get<std::uint64_t>());
      trees.push_back(tree_from_root(t.at("root"), dim));
    }
    return ForestModel(std::move(trees), std::move(seeds));
  });
}

}  // namespace bpl
