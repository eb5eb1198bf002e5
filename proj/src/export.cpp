#include "jcenter/export.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace jcenter {
namespace {

void require_cover(const Graph& g, const PartitionResult& p) {
  if (p.layers.size() != g.node_count())
    throw std::invalid_argument("partition covers " + std::to_string(p.layers.size()) +
                                " nodes, graph has " + std::to_string(g.node_count()));
}

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char ch : id) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

constexpr std::array<const char*, 8> kPalette = {
    "#d7191c", "#fdae61", "#ffffbf", "#abd9e9",
    "#2c7bb6", "#a6d96a", "#1a9641", "#bababa",
};

}  // namespace

std::string export_dot(const Graph& g, const PartitionResult& p) {
  require_cover(g, p);
  std::string out = "graph jordan_layers {\n";
  out += "  // radius " + std::to_string(p.radius) + ", depth " + std::to_string(p.depth) + "\n";
  out += "  node [style=filled];\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint32_t k = p.layers[v];
    out += "  " + quoted(g.label(v)) + " [layer=" + std::to_string(k) +
           ", fillcolor=\"" + kPalette[k % kPalette.size()] + "\"";
    if (k == 0) out += ", shape=doublecircle, penwidth=2";
    out += "];\n";
  }
  std::map<std::uint32_t, std::vector<NodeId>> by_layer;
  for (NodeId v = 0; v < g.node_count(); ++v) by_layer[p.layers[v]].push_back(v);
  for (const auto& [k, nodes] : by_layer) {
    out += "  subgraph layer_" + std::to_string(k) + " { rank=same;";
    for (NodeId v : nodes) out += ' ' + quoted(g.label(v)) + ';';
    out += " }\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
  out += "}\n";
  return out;
}

std::string export_json(const Graph& g, const PartitionResult& p) {
  require_cover(g, p);
  nlohmann::json layers = nlohmann::json::object();
  for (NodeId v = 0; v < g.node_count(); ++v) layers[g.label(v)] = p.layers[v];
  nlohmann::json doc = {{"radius", p.radius}, {"depth", p.depth}, {"layers", std::move(layers)}};
  return doc.dump(2) + "\n";
}

}  // namespace jcenter
