#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jcenter {

using NodeId = std::uint32_t;

/// Raised by parse_edge_list on malformed input. line() is 1-based; 0 means
/// the error is not tied to a particular line (e.g. empty input).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Raised when an algorithm that requires a connected graph receives one
/// that is not.
class NotConnectedError : public std::runtime_error {
public:
  NotConnectedError() : std::runtime_error("graph not connected") {}
};

/// Undirected simple graph with opaque string labels and dense indices
/// 0..N-1. Immutable once built; neighbor lists are sorted.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from labels and index pairs. Self-loops and duplicate
  /// edges are dropped; an out-of-range index or a repeated label throws
  /// std::invalid_argument.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label(NodeId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Edges as (min, max) index pairs in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Counts of input lines normalized away by parse_edge_list.
struct ParseStats {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Parses the whitespace-separated edge-list format. Lines starting with '#'
/// and blank lines are skipped. Labels are numbered in first-appearance
/// order; a self-loop line "a a" registers its label without adding an edge.
Graph parse_edge_list(std::string_view text, ParseStats* stats = nullptr);

/// Inverse of parse_edge_list. Edges are written sorted by (min index, max
/// index); a node with no incident edge is written as a self-loop line so the
/// output parses back to the same node set.
std::string to_edge_list(const Graph& g);

/// True iff a BFS from index 0 reaches every node. A single node is
/// connected; the empty graph is not.
bool check_connected(const Graph& g);

}  // namespace jcenter
