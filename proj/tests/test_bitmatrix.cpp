#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "jcenter/bitmatrix.hpp"
#include "jcenter/generator.hpp"
#include "jcenter/graph.hpp"
#include "support/oracles.hpp"

using namespace jcenter;
namespace t = jcenter::testing;

namespace {

BoolSymMatrix from_int(const t::IntMatrix& a) {
  BoolSymMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j]) m.set_symmetric(i, j);
  return m;
}

std::string rows_of(const BoolSymMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (i) out += ' ';
    for (std::size_t j = 0; j < m.width(); ++j) out += m.test(i, j) ? '1' : '0';
  }
  return out;
}

bool entrywise_geq(const BoolSymMatrix& a, const BoolSymMatrix& b) {
  for (std::size_t i = 0; i < a.width(); ++i)
    for (std::size_t j = 0; j < a.width(); ++j)
      if (b.test(i, j) && !a.test(i, j)) return false;
  return true;
}

}  // namespace

TEST(FromGraph, PathOfThree) {
  const BoolSymMatrix m = from_graph(parse_edge_list("a b\nb c"));
  EXPECT_EQ(rows_of(m), "110 111 011");
  EXPECT_TRUE(m.check_invariants());
  EXPECT_EQ(m.fill_count(1), 3u);
}

TEST(FromGraph, SingleNode) {
  const BoolSymMatrix m = from_graph(parse_edge_list("x x"));
  EXPECT_EQ(rows_of(m), "1");
  EXPECT_TRUE(has_full_row(m));
}

TEST(FromGraph, MatchesNaiveAdjacencyPlusIdentity) {
  std::mt19937_64 rng(3);
  for (double density : {0.05, 0.2, 0.6}) {
    const Graph g = t::random_connected(32, density, rng);
    const BoolSymMatrix m = from_graph(g);
    EXPECT_TRUE(t::matches_indicator(m, t::adjacency_plus_identity(g)));
    EXPECT_TRUE(m.check_invariants());
  }
}

TEST(Multiply, PathOfThreeSquaresToAllOnes) {
  const BoolSymMatrix a = from_graph(parse_edge_list("a b\nb c"));
  EXPECT_EQ(rows_of(multiply(a, a)), "111 111 111");
  EXPECT_EQ(rows_of(serial::multiply(a, a)), "111 111 111");
}

TEST(Multiply, IdentityIsNeutral) {
  std::mt19937_64 rng(8);
  const Graph g = t::random_connected(20, 0.1, rng);
  const BoolSymMatrix x = from_graph(g);
  const BoolSymMatrix id(20);
  EXPECT_EQ(multiply(id, x), x);
  EXPECT_EQ(multiply(x, id), x);
  EXPECT_EQ(serial::multiply(id, x), x);
}

TEST(Multiply, WidthMismatchThrows) {
  EXPECT_THROW(multiply(BoolSymMatrix(3), BoolSymMatrix(4)), std::invalid_argument);
  EXPECT_THROW(serial::multiply(BoolSymMatrix(3), BoolSymMatrix(4)), std::invalid_argument);
  LayerAssignment layers(3);
  EXPECT_THROW(multiply_tracking(BoolSymMatrix(3), BoolSymMatrix(4), 0, layers),
               std::invalid_argument);
}

// Powers of random adjacency matrices up to width 32 against the naive
// integer product.
TEST(Multiply, MatchesNaiveIntegerProduct) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 32)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    const Graph g = t::random_connected(n, density, rng);
    const auto a = t::adjacency_plus_identity(g);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t q = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto ap = t::int_power(a, p);
    const auto aq = t::int_power(a, q);
    const BoolSymMatrix m = from_int(ap);
    const BoolSymMatrix m2 = from_int(aq);
    const auto expected = t::int_product(ap, aq);
    const BoolSymMatrix got = multiply(m, m2);
    ASSERT_TRUE(t::matches_indicator(got, expected)) << "trial " << trial;
    ASSERT_TRUE(t::matches_indicator(serial::multiply(m, m2), expected)) << "trial " << trial;
    ASSERT_TRUE(got.check_invariants());
    ASSERT_TRUE(entrywise_geq(got, m2));
  }
}

// Word-boundary widths exercise the padding masks.
TEST(Multiply, ParallelMatchesSerialAcrossWordBoundaries) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1, 2, 63, 64, 65, 127, 128, 129, 200}) {
    const Graph g = t::random_connected(n, 2.0 / static_cast<double>(n), rng);
    BoolSymMatrix a = from_graph(g);
    BoolSymMatrix power = a;
    for (int step = 0; step < 4; ++step) {
      BoolSymMatrix fast = multiply(a, power);
      BoolSymMatrix ref = serial::multiply(a, power);
      ASSERT_EQ(fast, ref) << "width " << n << " step " << step;
      ASSERT_TRUE(fast.check_invariants());
      power = std::move(fast);
    }
    EXPECT_EQ(multiply(power, power), serial::multiply(power, power));
  }
}

TEST(Multiply, IndependentOfThreadCount) {
  std::mt19937_64 rng(12);
  const Graph g = t::random_connected(300, 0.01, rng);
  const BoolSymMatrix a = from_graph(g);
  const BoolSymMatrix a2 = multiply(a, a);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const BoolSymMatrix one = multiply(a, a2);
  omp_set_num_threads(4);
  const BoolSymMatrix four = multiply(a, a2);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
  for (std::size_t r = 0; r < one.width(); ++r) EXPECT_EQ(one.fill_count(r), four.fill_count(r));
}

TEST(MultiplyTracking, PathOfThreeTrace) {
  // a - b - c: b is full in R(A~) and pre-inserted; a and c fill at A~^2.
  const BoolSymMatrix a = from_graph(parse_edge_list("a b\nb c"));
  for (bool use_serial : {false, true}) {
    LayerAssignment layers(3);
    layers.assign(1, 0);
    const BoolSymMatrix out = use_serial ? serial::multiply_tracking(a, a, 0, layers)
                                         : multiply_tracking(a, a, 0, layers);
    EXPECT_EQ(rows_of(out), "111 111 111");
    EXPECT_TRUE(layers.complete());
    EXPECT_EQ(layers.at(0), 0u);
    EXPECT_EQ(layers.at(2), 0u);
  }
}

TEST(MultiplyTracking, NoNewFullRowLeavesLayersUnchanged) {
  const BoolSymMatrix a = from_graph(path_graph(9));
  for (bool use_serial : {false, true}) {
    LayerAssignment layers(9);
    const BoolSymMatrix out = use_serial ? serial::multiply_tracking(a, a, 7, layers)
                                         : multiply_tracking(a, a, 7, layers);
    EXPECT_FALSE(has_full_row(out));
    EXPECT_EQ(layers.assigned_count(), 0u);
  }
}

TEST(MultiplyTracking, SameMatrixAsMultiplyAndConsistentCounts) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 90)(rng);
    const Graph g = t::random_connected(n, 0.03, rng);
    const BoolSymMatrix a = from_graph(g);
    BoolSymMatrix fast = a, ref = a;
    LayerAssignment fast_layers(n), ref_layers(n);
    for (NodeId v = 0; v < n; ++v)
      if (a.row_full(v)) {
        fast_layers.assign(v, 0);
        ref_layers.assign(v, 0);
      }
    for (std::uint32_t round = 1; !fast_layers.complete(); ++round) {
      const BoolSymMatrix plain = multiply(a, fast);
      fast = multiply_tracking(a, fast, round, fast_layers);
      ref = serial::multiply_tracking(a, ref, round, ref_layers);
      ASSERT_EQ(fast, plain);
      ASSERT_EQ(fast, ref);
      ASSERT_TRUE(ref.check_invariants());
      ASSERT_TRUE(fast.check_invariants());
    }
    EXPECT_TRUE(ref_layers.complete());
    EXPECT_EQ(fast_layers.values(), ref_layers.values());
  }
}

TEST(HasFullRow, Examples) {
  EXPECT_TRUE(has_full_row(from_graph(star_graph(4))));
  const BoolSymMatrix p5 = from_graph(path_graph(5));
  EXPECT_FALSE(has_full_row(p5));
  const BoolSymMatrix p5sq = multiply(p5, p5);
  EXPECT_TRUE(has_full_row(p5sq));
  EXPECT_TRUE(p5sq.row_full(2));
  EXPECT_FALSE(p5sq.row_full(1));
}

TEST(LayerAssignment, AssignsOnce) {
  LayerAssignment layers(2);
  layers.assign(0, 3);
  EXPECT_THROW(layers.assign(0, 4), std::logic_error);
  EXPECT_FALSE(layers.complete());
  layers.assign(1, 0);
  EXPECT_TRUE(layers.complete());
}
