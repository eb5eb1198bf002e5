#include "jcenter/bitmatrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace jcenter {

BoolSymMatrix::BoolSymMatrix(std::size_t width)
    : width_(width),
      stride_((width + kWordBits - 1) / kWordBits),
      words_(width * stride_, 0),
      fills_(width, 1) {
  for (std::size_t i = 0; i < width; ++i)
    words_[i * stride_ + i / kWordBits] |= Word{1} << (i % kWordBits);
}

void BoolSymMatrix::set_symmetric(std::size_t i, std::size_t j) {
  const Word bit_j = Word{1} << (j % kWordBits);
  Word& wij = words_[i * stride_ + j / kWordBits];
  if (!(wij & bit_j)) {
    wij |= bit_j;
    ++fills_[i];
  }
  const Word bit_i = Word{1} << (i % kWordBits);
  Word& wji = words_[j * stride_ + i / kWordBits];
  if (!(wji & bit_i)) {
    wji |= bit_i;
    ++fills_[j];
  }
}

void BoolSymMatrix::recount_fills() {
  for (std::size_t r = 0; r < width_; ++r) {
    std::uint32_t count = 0;
    for (Word w : row(r)) count += static_cast<std::uint32_t>(std::popcount(w));
    fills_[r] = count;
  }
}

BoolSymMatrix::Word BoolSymMatrix::valid_mask(std::size_t w) const noexcept {
  const std::size_t tail = width_ % kWordBits;
  if (w + 1 < stride_ || tail == 0) return ~Word{0};
  return (Word{1} << tail) - 1;
}

bool BoolSymMatrix::check_invariants() const {
  for (std::size_t r = 0; r < width_; ++r) {
    if (!test(r, r)) return false;
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < stride_; ++w) {
      Word word = words_[r * stride_ + w];
      if (word & ~valid_mask(w)) return false;
      count += static_cast<std::uint32_t>(std::popcount(word));
    }
    if (count != fills_[r]) return false;
    for (std::size_t c = r + 1; c < width_; ++c)
      if (test(r, c) != test(c, r)) return false;
  }
  return true;
}

void LayerAssignment::assign(NodeId v, std::uint32_t layer) {
  std::uint32_t& slot = layer_.at(v);
  if (slot != kUnassigned)
    throw std::logic_error("node " + std::to_string(v) + " already has a layer");
  slot = layer;
  ++assigned_;
}

BoolSymMatrix from_graph(const Graph& g) {
  BoolSymMatrix m(g.node_count());
  for (auto [u, v] : g.edges()) m.set_symmetric(u, v);
  return m;
}

bool has_full_row(const BoolSymMatrix& m) {
  for (std::size_t r = 0; r < m.width(); ++r)
    if (m.row_full(r)) return true;
  return false;
}

namespace {

using Word = BoolSymMatrix::Word;
constexpr std::size_t kWordBits = BoolSymMatrix::kWordBits;

void require_same_width(const BoolSymMatrix& a, const BoolSymMatrix& b) {
  if (a.width() != b.width())
    throw std::invalid_argument("matrix width mismatch: " + std::to_string(a.width()) +
                                " vs " + std::to_string(b.width()));
}

// Bits of `row` strictly right of the diagonal within word w.
BoolSymMatrix::Word upper_mask(std::size_t row, std::size_t w) {
  const std::size_t first = row + 1;
  const std::size_t first_word = first / kWordBits;
  if (w > first_word) return ~Word{0};
  if (w < first_word) return 0;
  return ~Word{0} << (first % kWordBits);
}

// Upper-triangle bits (l, c), c > l, that are zero in m2 and nonzero in
// R(m * m2). Row l of the result is written only by the thread handling l.
std::vector<Word> new_upper_bits(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                                 std::vector<unsigned char>& row_touched) {
  const std::size_t width = m.width();
  const std::size_t stride = m.words_per_row();
  std::vector<Word> delta(width * stride, 0);
  const auto rows = static_cast<std::ptrdiff_t>(width);

#pragma omp parallel
  {
    std::vector<std::size_t> live_words;
    live_words.reserve(stride);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t l = 0; l < rows; ++l) {
      const auto row = static_cast<std::size_t>(l);
      if (m2.row_full(row)) continue;
      const auto lhs = m.row(row);
      const auto known = m2.row(row);
      // Only words where row l of m has bits can yield a witness.
      live_words.clear();
      for (std::size_t w = 0; w < stride; ++w)
        if (lhs[w]) live_words.push_back(w);

      Word* out = delta.data() + row * stride;
      bool touched = false;
      for (std::size_t w = (row + 1) / kWordBits; w < stride; ++w) {
        Word candidates = ~known[w] & upper_mask(row, w) & m2.valid_mask(w);
        Word found = 0;
        while (candidates) {
          const int bit = std::countr_zero(candidates);
          candidates &= candidates - 1;
          const auto rhs = m2.row(w * kWordBits + static_cast<std::size_t>(bit));
          for (std::size_t lw : live_words) {
            if (lhs[lw] & rhs[lw]) {
              found |= Word{1} << bit;
              break;
            }
          }
        }
        if (found) {
          out[w] = found;
          touched = true;
        }
      }
      row_touched[row] = touched;
    }
  }
  return delta;
}

}  // namespace

BoolSymMatrix multiply(const BoolSymMatrix& m, const BoolSymMatrix& m2) {
  require_same_width(m, m2);
  const std::size_t width = m.width();
  const std::size_t stride = m.words_per_row();
  std::vector<unsigned char> row_touched(width, 0);
  const std::vector<Word> delta = new_upper_bits(m, m2, row_touched);

  std::vector<std::size_t> touched_rows;
  for (std::size_t r = 0; r < width; ++r)
    if (row_touched[r]) touched_rows.push_back(r);

  BoolSymMatrix out = m2;
  const auto rows = static_cast<std::ptrdiff_t>(width);
  // Mirror: row c gets its own new upper bits plus column c of the new upper
  // bits of earlier rows. `delta` is read-only here.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t c = 0; c < rows; ++c) {
    const auto col = static_cast<std::size_t>(c);
    auto dst = out.row_words(col);
    const Word* own = delta.data() + col * stride;
    for (std::size_t w = 0; w < stride; ++w) dst[w] |= own[w];
    const std::size_t cw = col / kWordBits;
    const Word cbit = Word{1} << (col % kWordBits);
    for (std::size_t l : touched_rows) {
      if (l >= col) break;
      if (delta[l * stride + cw] & cbit) dst[l / kWordBits] |= Word{1} << (l % kWordBits);
    }
    std::uint32_t count = 0;
    for (Word word : dst) count += static_cast<std::uint32_t>(std::popcount(word));
    out.set_fill_count(col, count);
  }
  return out;
}

BoolSymMatrix multiply_tracking(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                                std::uint32_t round, LayerAssignment& layers) {
  BoolSymMatrix out = multiply(m, m2);
  // Sequential merge in index order keeps insertions deterministic.
  for (std::size_t r = 0; r < out.width(); ++r)
    if (out.row_full(r) && !m2.row_full(r)) layers.assign(static_cast<NodeId>(r), round);
  return out;
}

}  // namespace jcenter
