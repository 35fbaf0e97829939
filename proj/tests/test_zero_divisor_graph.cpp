#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zdg/zero_divisor_graph.hpp"

using Edges = std::vector<std::pair<zdg::integer, zdg::integer>>;
using Labels = std::vector<zdg::integer>;

TEST(ZeroDivisorGraph, Examples) {
  const auto g8 = zdg::build_zero_divisor_graph(8);
  EXPECT_EQ(g8.labels(), (Labels{2, 4, 6}));
  EXPECT_EQ(g8.edges(), (Edges{{2, 4}, {4, 6}}));

  const auto g9 = zdg::build_zero_divisor_graph(9);
  EXPECT_EQ(g9.labels(), (Labels{3, 6}));
  EXPECT_EQ(g9.edges(), (Edges{{3, 6}}));

  const auto g4 = zdg::build_zero_divisor_graph(4);
  EXPECT_EQ(g4.labels(), (Labels{2}));
  EXPECT_EQ(g4.edge_count(), 0u);
}

TEST(ZeroDivisorGraph, RejectsPrimes) {
  EXPECT_THROW(zdg::build_zero_divisor_graph(7), zdg::empty_graph_error);
  EXPECT_THROW(zdg::build_zero_divisor_graph(2), zdg::empty_graph_error);
  EXPECT_THROW(zdg::class_partition(13), zdg::empty_graph_error);
}

TEST(ZeroDivisorGraph, VertexCount) {
  for (auto n : zdg::testing::composites(4, 1000))
    EXPECT_EQ(zdg::build_zero_divisor_graph(n).order(), n - zdg::euler_phi(n) - 1);
}

TEST(SimpleGraph, PackedBitsAgreeWithEdgeList) {
  zdg::SimpleGraph g(Labels{1, 2, 3, 4, 5});
  g.add_edge(0, 4);
  g.add_edge(3, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(4, 0));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.edges(), (Edges{{1, 5}, {2, 4}, {3, 4}}));
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
}

TEST(ClassPartition, Eighteen) {
  const auto p = zdg::class_partition(18);
  ASSERT_EQ(p.classes.size(), 4u);
  EXPECT_EQ(p.classes[0].members, (Labels{2, 4, 8, 10, 14, 16}));
  EXPECT_EQ(p.classes[0].kind, zdg::ClassKind::Null);
  EXPECT_EQ(p.classes[1].members, (Labels{3, 15}));
  EXPECT_EQ(p.classes[1].kind, zdg::ClassKind::Null);
  EXPECT_EQ(p.classes[2].members, (Labels{6, 12}));
  EXPECT_EQ(p.classes[2].kind, zdg::ClassKind::Complete);
  EXPECT_EQ(p.classes[3].members, (Labels{9}));
  EXPECT_EQ(p.classes[3].kind, zdg::ClassKind::Complete);
}

TEST(ClassPartition, SmallCases) {
  const auto p9 = zdg::class_partition(9);
  ASSERT_EQ(p9.classes.size(), 1u);
  EXPECT_EQ(p9.classes[0].members, (Labels{3, 6}));
  EXPECT_EQ(p9.classes[0].kind, zdg::ClassKind::Complete);

  const auto p12 = zdg::class_partition(12);
  std::vector<std::size_t> sizes;
  for (const auto& c : p12.classes) sizes.push_back(c.members.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 2, 1}));
}

TEST(ClassPartition, InvariantsOverRange) {
  for (auto n : zdg::testing::composites(4, 1000)) {
    const auto p = zdg::class_partition(n);
    std::size_t covered = 0;
    for (const auto& c : p.classes) {
      EXPECT_EQ(c.members.size(), zdg::euler_phi(n / c.divisor));
      EXPECT_EQ(c.kind == zdg::ClassKind::Complete, (c.divisor * c.divisor) % n == 0 || c.members.size() == 1);
      for (auto x : c.members) EXPECT_EQ(std::gcd(x, n), c.divisor);
      covered += c.members.size();
    }
    EXPECT_EQ(covered, n - zdg::euler_phi(n) - 1);
  }
}

TEST(VerifyEquitable, Examples) {
  for (zdg::integer n : {18, 12, 9, 25, 49, 4, 8})
    EXPECT_TRUE(zdg::verify_equitable(zdg::build_zero_divisor_graph(n), zdg::class_partition(n))) << n;
}

TEST(VerifyEquitable, DetectsBrokenPartition) {
  // Move 9 into the class of 3 in Z_18; 9 is adjacent to A_2 while 3 and 15 are not.
  auto p = zdg::class_partition(18);
  p.classes[1].members.push_back(9);
  p.classes[3].members.clear();
  EXPECT_FALSE(zdg::verify_equitable(zdg::build_zero_divisor_graph(18), p));
}

TEST(VerifyEquitable, MismatchedN) {
  EXPECT_THROW(zdg::verify_equitable(zdg::build_zero_divisor_graph(18), zdg::class_partition(12)),
               std::invalid_argument);
}

TEST(Degrees, Examples) {
  EXPECT_EQ(zdg::degrees(zdg::build_zero_divisor_graph(8)), (std::vector<zdg::integer>{1, 2, 1}));
  EXPECT_EQ(zdg::degrees(zdg::build_zero_divisor_graph(4)), (std::vector<zdg::integer>{0}));
  const auto d15 = zdg::degrees(zdg::build_zero_divisor_graph(15));
  EXPECT_EQ(*std::min_element(d15.begin(), d15.end()), 2u);
}

TEST(Degrees, MinimumDegreeFormula) {
  for (auto n : zdg::testing::composites(4, 1000)) {
    const auto f = zdg::factorize(n);
    const auto deg = zdg::degrees(zdg::build_zero_divisor_graph(n));
    const auto p = f.smallest_prime();
    const bool prime_square = f.is_prime_power() && f.factors[0].exponent == 2;
    EXPECT_EQ(*std::min_element(deg.begin(), deg.end()), prime_square ? p - 2 : p - 1) << n;
  }
}

TEST(ZeroDivisorGraph, CompleteExactlyForPrimeSquares) {
  for (auto n : zdg::testing::composites(4, 1000)) {
    const auto g = zdg::build_zero_divisor_graph(n);
    const bool complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
    const auto f = zdg::factorize(n);
    EXPECT_EQ(complete, f.is_prime_power() && f.factors[0].exponent == 2) << n;
  }
}

TEST(GeneralizedJoin, ReconstructsOracleGraph) {
  for (auto n : zdg::testing::composites(4, 600)) {
    const auto expanded = zdg::expand_generalized_join(zdg::build_divisor_graph(n), zdg::class_partition(n));
    EXPECT_EQ(expanded, zdg::build_zero_divisor_graph(n)) << n;
  }
}

TEST(ClassStructure, DegreesMatchOracle) {
  for (auto n : zdg::testing::composites(4, 600)) {
    const auto dg = zdg::build_divisor_graph(n);
    const auto by_class = zdg::zero_divisor_degrees_by_class(dg);
    const auto g = zdg::build_zero_divisor_graph(n);
    const auto deg = zdg::degrees(g);
    for (std::size_t v = 0; v < g.order(); ++v) {
      const auto idx = dg.index_of(std::gcd(g.labels()[v], n));
      EXPECT_EQ(deg[v], by_class[idx]) << "n=" << n << " x=" << g.labels()[v];
    }
    EXPECT_EQ(zdg::zero_divisor_degree_sum(dg), 2 * g.edge_count());
  }
}
