#include <stdexcept>

#include "jcenter/bitmatrix.hpp"

namespace jcenter::serial {
namespace {

void require_same_width(const BoolSymMatrix& a, const BoolSymMatrix& b) {
  if (a.width() != b.width()) throw std::invalid_argument("matrix width mismatch");
}

// True iff some witness i has m(l, i) and m2(i, c); stops at the first one.
bool scalar_product_nonzero(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                            std::size_t l, std::size_t c) {
  for (std::size_t i = 0; i < m.width(); ++i)
    if (m.test(l, i) && m2.test(i, c)) return true;
  return false;
}

}  // namespace

BoolSymMatrix multiply(const BoolSymMatrix& m, const BoolSymMatrix& m2) {
  require_same_width(m, m2);
  const std::size_t width = m.width();
  BoolSymMatrix out = m2;
  for (std::size_t l = 0; l < width; ++l)
    for (std::size_t c = l + 1; c < width; ++c)
      if (!out.test(l, c) && scalar_product_nonzero(m, m2, l, c)) out.set_symmetric(l, c);
  return out;
}

BoolSymMatrix multiply_tracking(const BoolSymMatrix& m, const BoolSymMatrix& m2,
                                std::uint32_t round, LayerAssignment& layers) {
  require_same_width(m, m2);
  const std::size_t width = m.width();
  BoolSymMatrix out = m2;
  std::vector<std::uint32_t> rows(m2.fill_counts().begin(), m2.fill_counts().end());
  for (std::size_t l = 0; l < width; ++l) {
    for (std::size_t c = l + 1; c < width; ++c) {
      if (out.test(l, c) || !scalar_product_nonzero(m, m2, l, c)) continue;
      out.set_symmetric(l, c);
      ++rows[l];
      ++rows[c];
      if (rows[l] == width) layers.assign(static_cast<NodeId>(l), round);
      if (rows[c] == width) layers.assign(static_cast<NodeId>(c), round);
    }
  }
  return out;
}

}  // namespace jcenter::serial
