#pragma once

#include <string>

#include "jcenter/graph.hpp"
#include "jcenter/partition.hpp"

namespace jcenter {

/// Undirected DOT graph. Every node carries a `layer` attribute and a fill
/// color keyed by its layer; center nodes are drawn as double circles; each
/// layer is a `rank=same` subgraph. Throws std::invalid_argument if the
/// partition does not cover every node of `g`.
std::string export_dot(const Graph& g, const PartitionResult& p);

/// {"radius": r, "depth": d, "layers": {label: k, ...}} with keys sorted by
/// label. Same coverage check as export_dot.
std::string export_json(const Graph& g, const PartitionResult& p);

}  // namespace jcenter
