#include "jcenter/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace jcenter {
namespace {

BoolSymMatrix product(const BoolSymMatrix& m, const BoolSymMatrix& m2, Kernel kernel) {
  return kernel == Kernel::serial ? serial::multiply(m, m2) : multiply(m, m2);
}

BoolSymMatrix product_tracking(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                               std::uint32_t round, LayerAssignment& layers,
                               Kernel kernel) {
  return kernel == Kernel::serial ? serial::multiply_tracking(m, m2, round, layers)
                                  : multiply_tracking(m, m2, round, layers);
}

// Multiplies by `adjacency` until every row has filled. Each power at most
// adds one hop, so more than `width` rounds means a disconnected input.
void fill_remaining(const BoolSymMatrix& adjacency, BoolSymMatrix current,
                    std::uint32_t round, LayerAssignment& layers, Kernel kernel) {
  const std::uint32_t limit = round + static_cast<std::uint32_t>(adjacency.width());
  while (!layers.complete()) {
    if (round > limit) throw NotConnectedError();
    current = product_tracking(adjacency, current, round, layers, kernel);
    ++round;
  }
}

}  // namespace

std::vector<NodeId> PartitionResult::center() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < layers.size(); ++v)
    if (layers[v] == 0) out.push_back(v);
  return out;
}

std::vector<BoolSymMatrix> doubling_powers(const BoolSymMatrix& adjacency, Kernel kernel) {
  std::vector<BoolSymMatrix> powers;
  if (has_full_row(adjacency)) return powers;
  powers.push_back(adjacency);
  for (;;) {
    // 2^k >= width fills every row of a connected graph.
    if (std::size_t{1} << (powers.size() - 1) >= adjacency.width()) throw NotConnectedError();
    BoolSymMatrix square = product(powers.back(), powers.back(), kernel);
    if (has_full_row(square)) break;
    powers.push_back(std::move(square));
  }
  return powers;
}

BelowRadius assemble_below_radius(std::span<const BoolSymMatrix> powers, Kernel kernel) {
  if (powers.empty()) throw std::invalid_argument("no powers to assemble");
  BelowRadius acc{powers.back(), std::uint64_t{1} << (powers.size() - 1)};
  for (std::size_t k = powers.size() - 1; k-- > 0;) {
    BoolSymMatrix candidate = product(acc.matrix, powers[k], kernel);
    if (!has_full_row(candidate)) {
      acc.matrix = std::move(candidate);
      acc.exponent += std::uint64_t{1} << k;
    }
  }
  return acc;
}

PartitionResult partition(const Graph& g, const PartitionOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!check_connected(g)) throw NotConnectedError();

  PartitionResult result;
  if (n == 1) {
    result.layers.assign(1, 0);
    return result;
  }

  const BoolSymMatrix adjacency = from_graph(g);
  LayerAssignment layers(n);

  if (options.use_doubling) {
    if (has_full_row(adjacency)) {
      // Radius 1: the first power is already A~ itself.
      result.radius = 1;
      for (NodeId v = 0; v < n; ++v)
        if (adjacency.row_full(v)) layers.assign(v, 0);
      fill_remaining(adjacency, adjacency, 1, layers, options.kernel);
    } else {
      const auto powers = doubling_powers(adjacency, options.kernel);
      BelowRadius below = assemble_below_radius(powers, options.kernel);
      result.radius = static_cast<std::uint32_t>(below.exponent + 1);
      fill_remaining(adjacency, std::move(below.matrix), 0, layers, options.kernel);
    }
    result.layers = layers.values();
  } else {
    // Record the first power at which each row fills, then shift by the
    // smallest one.
    for (NodeId v = 0; v < n; ++v)
      if (adjacency.row_full(v)) layers.assign(v, 1);
    fill_remaining(adjacency, adjacency, 2, layers, options.kernel);
    const auto& fill_power = layers.values();
    result.radius = *std::min_element(fill_power.begin(), fill_power.end());
    result.layers.reserve(n);
    for (std::uint32_t p : fill_power) result.layers.push_back(p - result.radius);
  }

  result.depth = *std::max_element(result.layers.begin(), result.layers.end());
  return result;
}

}  // namespace jcenter
