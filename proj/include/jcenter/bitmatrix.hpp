#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "jcenter/graph.hpp"

namespace jcenter {

/// Square boolean matrix with bit-packed rows, a unit diagonal and symmetric
/// contents. Produced by this library it always equals R(A~^n) for some
/// n >= 1: bit (i, j) is set iff dist(i, j) <= n.
///
/// Bits past `width` in the last word of a row are always zero. Per-row
/// popcounts are cached in fill_count().
class BoolSymMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BoolSymMatrix() = default;
  /// Identity matrix of the given width.
  explicit BoolSymMatrix(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool test(std::size_t row, std::size_t col) const {
    return (words_[row * stride_ + col / kWordBits] >> (col % kWordBits)) & 1u;
  }
  /// Sets (i, j) and (j, i). Fill counts are updated.
  void set_symmetric(std::size_t i, std::size_t j);

  std::span<const Word> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t r) { return {words_.data() + r * stride_, stride_}; }

  std::uint32_t fill_count(std::size_t r) const { return fills_[r]; }
  std::span<const std::uint32_t> fill_counts() const noexcept { return fills_; }
  bool row_full(std::size_t r) const { return fills_[r] == width_; }

  /// Recomputes every cached fill count from the row bits.
  void recount_fills();
  /// Overwrites the cached count of one row (for kernels that track fills
  /// incrementally).
  void set_fill_count(std::size_t r, std::uint32_t count) { fills_[r] = count; }

  /// Mask of valid bits in word `w` of a row.
  Word valid_mask(std::size_t w) const noexcept;

  /// True iff symmetric with unit diagonal, padding bits clear and cached
  /// counts matching the bits.
  bool check_invariants() const;

  friend bool operator==(const BoolSymMatrix& a, const BoolSymMatrix& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

private:
  std::size_t width_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
  std::vector<std::uint32_t> fills_;
};

/// Layer index per node, filled in as rows of successive powers fill up.
class LayerAssignment {
public:
  static constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

  LayerAssignment() = default;
  explicit LayerAssignment(std::size_t nodes) : layer_(nodes, kUnassigned) {}

  std::size_t node_count() const noexcept { return layer_.size(); }
  std::size_t assigned_count() const noexcept { return assigned_; }
  bool complete() const noexcept { return assigned_ == layer_.size(); }
  bool contains(NodeId v) const { return layer_.at(v) != kUnassigned; }
  std::uint32_t at(NodeId v) const { return layer_.at(v); }

  /// Throws std::logic_error if v already has a layer.
  void assign(NodeId v, std::uint32_t layer);

  const std::vector<std::uint32_t>& values() const noexcept { return layer_; }

private:
  std::vector<std::uint32_t> layer_;
  std::size_t assigned_ = 0;
};

/// R(A~): adjacency plus identity.
BoolSymMatrix from_graph(const Graph& g);

/// R(m * m2) for two powers of the same R(A~).
///
/// The result starts as a copy of m2; only its zero entries above the
/// diagonal are evaluated and each evaluation stops at the first witness
/// word of row(l) & row(c). Rows already full in m2 are skipped. The upper
/// triangle is computed row-parallel with OpenMP and then mirrored, so no two
/// threads write the same word and the result does not depend on the thread
/// count.
///
/// Both operands must be powers of one symmetric unit-diagonal matrix; the
/// symmetric write relies on it. Throws std::invalid_argument on a width
/// mismatch.
BoolSymMatrix multiply(const BoolSymMatrix& m, const BoolSymMatrix& m2);

/// multiply() that also records, in `layers`, every row which becomes full
/// in the result but was not full in m2, with layer `round`. `layers` must
/// already hold exactly the rows full in m2.
BoolSymMatrix multiply_tracking(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                                std::uint32_t round, LayerAssignment& layers);

/// True iff some row has every bit set.
bool has_full_row(const BoolSymMatrix& m);

/// Element-wise, single-threaded transcriptions of the product kernels. They
/// follow the textbook triple loop with the early exit, the skip of known
/// nonzero entries and the symmetric write, one bit at a time. Kept as the
/// reference the parallel kernels are tested and benchmarked against.
namespace serial {

BoolSymMatrix multiply(const BoolSymMatrix& m, const BoolSymMatrix& m2);

/// Tracks fill counts incrementally while writing, as the insertion happens
/// the moment a count reaches the width.
BoolSymMatrix multiply_tracking(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                                std::uint32_t round, LayerAssignment& layers);

}  // namespace serial

}  // namespace jcenter
