#include "jcenter/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace jcenter {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  const std::size_t n = labels.size();
  {
    std::vector<std::string_view> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate node label");
  }
  g.labels_ = std::move(labels);
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    adj.shrink_to_fit();
    degree_sum += adj.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph parse_edge_list(std::string_view text, ParseStats* stats) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::pair<NodeId, NodeId>> edges;
  ParseStats local;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::istringstream in{std::string(line)};
    std::string first;
    if (!(in >> first) || first.front() == '#') continue;
    std::string second, extra;
    if (!(in >> second) || (in >> extra))
      throw ParseError(line_no, "expected exactly two labels per edge line");

    NodeId u = intern(first);
    NodeId v = intern(second);
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (labels.empty()) throw ParseError(0, "empty graph");

  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  local.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  if (stats) *stats = local;
  return Graph::from_edges(std::move(labels), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.neighbors(v).empty()) out += g.label(v) + ' ' + g.label(v) + '\n';
  }
  for (auto [u, v] : g.edges()) out += g.label(u) + ' ' + g.label(v) + '\n';
  return out;
}

bool check_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == n;
}

}  // namespace jcenter
