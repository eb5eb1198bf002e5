#include "jcenter/baseline.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace jcenter {

DistanceMatrix floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = 0;
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) d(i, j) = 1;
  }
  constexpr auto inf = DistanceMatrix::kUnreachable;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t dik = d(i, k);
      if (dik == inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t dkj = d(k, j);
        if (dkj != inf && dik + dkj < d(i, j)) d(i, j) = dik + dkj;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) == inf) throw NotConnectedError();
  return d;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::uint32_t> dist(g.node_count(), DistanceMatrix::kUnreachable);
  std::deque<NodeId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == DistanceMatrix::kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> bfs_eccentricities(const Graph& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.node_count());
  std::vector<std::uint32_t> ecc(g.node_count(), 0);
  bool disconnected = false;
#pragma omp parallel for schedule(dynamic) reduction(|| : disconnected)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, static_cast<NodeId>(s));
    const auto far = *std::max_element(dist.begin(), dist.end());
    if (far == DistanceMatrix::kUnreachable) disconnected = true;
    ecc[static_cast<std::size_t>(s)] = far;
  }
  if (disconnected) throw NotConnectedError();
  return ecc;
}

PartitionResult partition_from_eccentricities(const std::vector<std::uint32_t>& ecc) {
  if (ecc.empty()) throw std::invalid_argument("empty graph");
  PartitionResult result;
  result.radius = *std::min_element(ecc.begin(), ecc.end());
  result.layers.reserve(ecc.size());
  for (std::uint32_t e : ecc) result.layers.push_back(e - result.radius);
  result.depth = *std::max_element(ecc.begin(), ecc.end()) - result.radius;
  return result;
}

PartitionResult oracle_partition(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  return partition_from_eccentricities(bfs_eccentricities(g));
}

PartitionResult floyd_warshall_partition(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  const DistanceMatrix d = floyd_warshall(g);
  std::vector<std::uint32_t> ecc(g.node_count(), 0);
  for (std::size_t i = 0; i < d.width(); ++i)
    for (std::size_t j = 0; j < d.width(); ++j) ecc[i] = std::max(ecc[i], d(i, j));
  return partition_from_eccentricities(ecc);
}

}  // namespace jcenter
