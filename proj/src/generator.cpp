#include "jcenter/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace jcenter {
namespace {

using Edge = std::pair<NodeId, NodeId>;

std::size_t max_edges(std::size_t n) { return n * (n - 1) / 2; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Picks `count` distinct elements of `pool` uniformly (partial Fisher-Yates).
void sample_into(std::vector<Edge>& pool, std::size_t count, std::mt19937_64& rng,
                 std::vector<Edge>& out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = uniform_index(rng, i, pool.size() - 1);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
}

class EdgeSet {
public:
  explicit EdgeSet(std::size_t n) : n_(n), bits_(n * n, false) {}
  bool contains(NodeId u, NodeId v) const { return bits_[u * n_ + v]; }
  void insert(NodeId u, NodeId v) {
    bits_[u * n_ + v] = true;
    bits_[v * n_ + u] = true;
  }

private:
  std::size_t n_;
  std::vector<bool> bits_;
};

// Free pairs at backbone-position gap <= 1 if hanging nodes attach over
// [lo, hi]. Simulated on a copy of the generator so the caller's draws match.
std::size_t tight_capacity(std::size_t n, std::size_t backbone_edges, std::size_t lo,
                           std::size_t hi, const std::mt19937_64& rng) {
  std::mt19937_64 sim = rng;
  std::vector<std::size_t> count(backbone_edges + 1, 1);
  for (std::size_t v = backbone_edges + 1; v < n; ++v) ++count[uniform_index(sim, lo, hi)];
  std::size_t pairs = 0;
  for (std::size_t p = 0; p <= backbone_edges; ++p) {
    pairs += count[p] * (count[p] - 1) / 2;
    if (p < backbone_edges) pairs += count[p] * count[p + 1];
  }
  return pairs - (n - 1);  // every tree edge has gap <= 1
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Relabels node i as perm[i] so generated structure is not index-aligned.
Graph build_permuted(std::size_t n, std::vector<Edge> edges, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edges(numeric_labels(n), edges);
}

}  // namespace

void validate_morphology(const Morphology& m) {
  if (m.nodes == 0) throw std::invalid_argument("morphology needs at least one node");
  if (m.edges < m.nodes - 1 || m.edges > max_edges(m.nodes))
    throw std::invalid_argument("edge count " + std::to_string(m.edges) +
                                " infeasible for a connected simple graph on " +
                                std::to_string(m.nodes) + " nodes");
  if (m.depth > m.nodes - 1)
    throw std::invalid_argument("depth " + std::to_string(m.depth) +
                                " exceeds nodes - 1");
}

Graph generate_morphology(const Morphology& m, std::uint64_t seed) {
  validate_morphology(m);
  const std::size_t n = m.nodes;
  std::mt19937_64 rng(seed);

  const std::size_t backbone_edges = std::min(2 * m.depth, n - 1);
  std::vector<std::size_t> position(n, 0);
  std::vector<Edge> edges;
  edges.reserve(m.edges);
  EdgeSet present(n);

  for (std::size_t i = 0; i <= backbone_edges; ++i) {
    position[i] = i;
    if (i > 0) {
      edges.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
      present.insert(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
    }
  }
  // Hanging nodes attach to backbone positions [lo, hi]. Interior positions
  // keep every hanging node within depth of the middle; the band narrows
  // around the middle when the tight chord window would otherwise run dry.
  const std::size_t chords = m.edges - (n - 1);
  std::size_t lo = backbone_edges >= 2 ? 1 : 0;
  std::size_t hi = backbone_edges >= 2 ? backbone_edges - 1 : 0;
  if (chords > 0 && m.depth >= 1 && backbone_edges == 2 * m.depth) {
    std::size_t band = m.depth - 1;
    for (;; --band) {
      if (band == 0 || tight_capacity(n, backbone_edges, m.depth - band, m.depth + band, rng) >= chords)
        break;
    }
    lo = m.depth - band;
    hi = m.depth + band;
  }
  for (std::size_t v = backbone_edges + 1; v < n; ++v) {
    auto parent = static_cast<NodeId>(uniform_index(rng, lo, hi));
    position[v] = position[parent];
    edges.emplace_back(parent, static_cast<NodeId>(v));
    present.insert(parent, static_cast<NodeId>(v));
  }

  if (chords > 0) {
    // Bucket every free pair by backbone-position distance, then take the
    // smallest window that holds enough candidates.
    std::vector<std::vector<Edge>> by_gap(backbone_edges + 1);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (!present.contains(u, v)) {
          std::size_t gap = position[u] > position[v] ? position[u] - position[v]
                                                      : position[v] - position[u];
          by_gap[gap].push_back({u, v});
        }
    std::vector<Edge> pool;
    std::size_t window = 0;
    for (; window < by_gap.size(); ++window) {
      pool.insert(pool.end(), by_gap[window].begin(), by_gap[window].end());
      if (window >= 1 && pool.size() >= chords) break;
    }
    // validate_morphology guarantees the full pool suffices.
    sample_into(pool, chords, rng, edges);
  }
  return build_permuted(n, std::move(edges), rng);
}

Graph generate_uniform_connected(std::size_t nodes, std::size_t edges,
                                 std::uint64_t seed) {
  validate_morphology({nodes, edges, 0});
  std::mt19937_64 rng(seed);
  std::vector<NodeId> order(nodes);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> out;
  out.reserve(edges);
  EdgeSet present(nodes);
  for (std::size_t i = 1; i < nodes; ++i) {
    NodeId parent = order[uniform_index(rng, 0, i - 1)];
    out.emplace_back(parent, order[i]);
    present.insert(parent, order[i]);
  }
  const std::size_t extra = edges - (nodes - 1);
  if (extra > 0) {
    std::vector<Edge> pool;
    pool.reserve(max_edges(nodes) - (nodes - 1));
    for (NodeId u = 0; u < nodes; ++u)
      for (NodeId v = u + 1; v < nodes; ++v)
        if (!present.contains(u, v)) pool.push_back({u, v});
    sample_into(pool, extra, rng, out);
  }
  return Graph::from_edges(numeric_labels(nodes), out);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
  return Graph::from_edges(numeric_labels(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(numeric_labels(n), edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_edges(numeric_labels(leaves + 1), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(numeric_labels(n), edges);
}

}  // namespace jcenter
