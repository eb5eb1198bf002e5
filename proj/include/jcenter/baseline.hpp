#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "jcenter/graph.hpp"
#include "jcenter/partition.hpp"

namespace jcenter {

/// Dense N x N hop-distance matrix.
class DistanceMatrix {
public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t width)
      : width_(width), d_(width * width, kUnreachable) {}

  std::size_t width() const noexcept { return width_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * width_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return d_[i * width_ + j]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  std::size_t width_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Textbook triple loop over intermediate vertices with unit weights. No
/// blocking or bit tricks. Throws NotConnectedError if a pair stays
/// unreachable.
DistanceMatrix floyd_warshall(const Graph& g);

/// Hop distances from one source; kUnreachable where no path exists.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// One BFS per source (sources run in parallel). Throws NotConnectedError.
std::vector<std::uint32_t> bfs_eccentricities(const Graph& g);

/// Layers from eccentricities computed the direct way.
PartitionResult partition_from_eccentricities(const std::vector<std::uint32_t>& ecc);

/// Reference partition via bfs_eccentricities.
PartitionResult oracle_partition(const Graph& g);

/// Reference partition via floyd_warshall; the timed baseline.
PartitionResult floyd_warshall_partition(const Graph& g);

}  // namespace jcenter
