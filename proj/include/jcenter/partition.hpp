#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jcenter/bitmatrix.hpp"
#include "jcenter/graph.hpp"

namespace jcenter {

/// Which product kernels the driver uses.
enum class Kernel {
  parallel,  ///< bit-packed OpenMP kernels
  serial,    ///< element-wise reference kernels
};

struct PartitionOptions {
  /// Locate the radius by repeated squaring and binary decomposition instead
  /// of stepping one power at a time. Same output; faster on deep graphs.
  bool use_doubling = true;
  Kernel kernel = Kernel::parallel;
};

/// Radius of the graph and, per node index, its layer: eccentricity minus
/// radius. Layer 0 is the Jordan center.
struct PartitionResult {
  std::uint32_t radius = 0;
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> layers;

  /// Indices in layer 0, ascending.
  std::vector<NodeId> center() const;

  friend bool operator==(const PartitionResult&, const PartitionResult&) = default;
};

/// Repeated squares R(A~), R(A~^2), R(A~^4), ... up to the last one that has
/// no full row. Empty when `adjacency` itself already has a full row
/// (radius <= 1). The input must come from a connected graph, otherwise no
/// row ever fills; this is caught by the squaring count exceeding the width.
std::vector<BoolSymMatrix> doubling_powers(const BoolSymMatrix& adjacency,
                                           Kernel kernel = Kernel::parallel);

struct BelowRadius {
  BoolSymMatrix matrix;         ///< R(A~^exponent)
  std::uint64_t exponent = 0;   ///< radius - 1
};

/// Greedy binary descent over the output of doubling_powers: start from the
/// largest square and multiply in each smaller one whose product still has
/// no full row. The result is the largest power without a full row.
/// Throws std::invalid_argument if `powers` is empty.
BelowRadius assemble_below_radius(std::span<const BoolSymMatrix> powers,
                                  Kernel kernel = Kernel::parallel);

/// Radius and layer of every node. Throws NotConnectedError for a
/// disconnected graph and std::invalid_argument for an empty one.
PartitionResult partition(const Graph& g, const PartitionOptions& options = {});

}  // namespace jcenter
