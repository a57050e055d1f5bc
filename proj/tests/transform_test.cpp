#include "relabel/transform.hpp"

#include <gtest/gtest.h>

#include <random>

#include "relabel/exact_path.hpp"
#include "relabel/exact_star.hpp"
#include "test_support.hpp"

namespace relabel {
namespace {

TEST(SpanningTreeTransform, Examples) {
  const auto p3 = make_family(Family::path, 3);
  const auto id = VertexLabeling::identity(3);
  EXPECT_TRUE(spanning_tree_transform(p3, id, id).empty());
  const auto seq = spanning_tree_transform(p3, testing::reversal(3), id);
  EXPECT_EQ(apply_sequence(p3, testing::reversal(3), seq), id);
  EXPECT_LE(seq.size(), 3u);
}

TEST(SpanningTreeTransform, IterationCostIsBoundedByResidualSize) {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const auto g = random_connected_graph(n, 0.15, seed);
    const auto a = testing::random_labeling(n, rng);
    const auto b = testing::random_labeling(n, rng);
    const auto trace = spanning_tree_transform_trace(g, a, b);
    ASSERT_EQ(apply_sequence(g, a, trace.flips), b);
    ASSERT_LE(trace.flips.size(), distance_upper_bound(g));
    ASSERT_EQ(trace.per_iteration.size(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_LE(trace.per_iteration[i], n - 1 - i);
  }
}

TEST(SpanningTreeTransform, EdgeLabelings) {
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_connected_graph(3 + seed % 10, 0.3, seed);
    const auto m = g.edge_count();
    const EdgeLabeling a(testing::random_permutation(m, rng));
    const EdgeLabeling b(testing::random_permutation(m, rng));
    const auto seq = spanning_tree_transform(g, a, b);
    ASSERT_EQ(apply_sequence(g, a, seq), b);
    ASSERT_LE(seq.size(), distance_upper_bound(g, Mode::edge));
  }
}

TEST(DistanceUpperBound, Examples) {
  EXPECT_EQ(distance_upper_bound(make_family(Family::path, 7)), 21u);
  EXPECT_EQ(distance_upper_bound(make_family(Family::path, 1)), 0u);
  EXPECT_EQ(distance_upper_bound(make_family(Family::path, 4), Mode::edge), 3u);
}

TEST(PG, AgreesWithClosedFormsOnPathsAndStars) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto a = testing::random_labeling(n, rng);
    const auto b = testing::random_labeling(n, rng);
    ASSERT_EQ(p_G(make_family(Family::path, n), a, b), path_distance(a, b));
    ASSERT_EQ(p_G(make_family(Family::star, n), a, b), star_distance(a, b));
  }
}

TEST(PG, CompleteGraphIsSupportMinusCycles) {
  std::mt19937_64 rng(4);
  const auto k5 = make_family(Family::complete, 5);
  for (int rep = 0; rep < 30; ++rep) {
    const auto a = testing::random_labeling(5, rng);
    const auto b = testing::random_labeling(5, rng);
    const auto cd = cycle_decomposition(relative_permutation(a, b));
    ASSERT_EQ(p_G(k5, a, b), cd.support_size() - cd.cycle_count());
  }
}

TEST(PG, RejectsBadInput) {
  const auto id = VertexLabeling::identity(3);
  EXPECT_THROW(p_G(Graph(3, {Edge(0, 1)}), id, id), InvalidArgument);
  EXPECT_THROW(p_G(make_family(Family::path, 11), VertexLabeling::identity(11),
                   VertexLabeling::identity(11)),
               CapacityError);
}

TEST(ExactT, MatchesOracleWalks) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = random_connected_graph(5, 0.5, seed);
    const ConfigurationSpace space(g);
    const auto a = testing::random_labeling(5, rng);
    const auto b = testing::random_labeling(5, rng);
    for (std::uint64_t t = 0; t <= 12; ++t)
      ASSERT_EQ(exact_t_feasible(g, a, b, t),
                reachable_in_exactly(space, a.permutation(), b.permutation(), t));
  }
}

TEST(PGDiameter, Examples) {
  EXPECT_EQ(p_G_diameter(make_family(Family::path, 5)), 10u);
  EXPECT_EQ(p_G_diameter(make_family(Family::star, 5)), 6u);
  EXPECT_EQ(p_G_diameter(make_family(Family::complete, 5)), 4u);
}

}  // namespace
}  // namespace relabel
