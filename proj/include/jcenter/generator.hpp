#pragma once

#include <cstddef>
#include <cstdint>

#include "jcenter/graph.hpp"

namespace jcenter {

/// Target shape of a generated graph: node count, edge count and depth
/// (diameter minus radius).
struct Morphology {
  std::size_t nodes = 1;
  std::size_t edges = 0;
  std::size_t depth = 0;

  friend bool operator==(const Morphology&, const Morphology&) = default;
};

/// Throws std::invalid_argument unless a connected simple graph with this
/// node and edge count exists and depth <= nodes - 1.
void validate_morphology(const Morphology& m);

/// Random connected simple graph with exactly m.nodes nodes and m.edges
/// edges, steered toward depth m.depth. Deterministic for a given seed.
///
/// Construction: a backbone path of 2*depth edges fixes the diameter; the
/// remaining nodes hang off interior backbone nodes and inherit their
/// backbone position; chords only join nodes whose positions differ by at
/// most one, so no chord shortens the backbone. When 2*depth+1 <= nodes and
/// depth >= 1 this yields depth exactly. If the position window does not
/// hold enough chord candidates it is widened one step at a time, which may
/// lower the depth. The realized depth must be measured, not assumed.
///
/// Labels are "0".."N-1" assigned through a random permutation, so backbone
/// order is not visible in the indices.
Graph generate_morphology(const Morphology& m, std::uint64_t seed);

/// Random spanning tree (random attachment) plus uniformly chosen extra
/// edges. No depth steering; used for broad test coverage.
Graph generate_uniform_connected(std::size_t nodes, std::size_t edges,
                                 std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Hub "0" joined to leaves "1".."leaves".
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);

}  // namespace jcenter
