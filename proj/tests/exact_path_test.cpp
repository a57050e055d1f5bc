#include "relabel/exact_path.hpp"

#include <gtest/gtest.h>

#include <random>

#include "relabel/oracle.hpp"
#include "test_support.hpp"

namespace relabel {
namespace {

using testing::reversal;

TEST(PathDistance, Examples) {
  const auto id = VertexLabeling::identity(4);
  EXPECT_EQ(path_distance(id, id), 0u);
  EXPECT_EQ(path_distance(reversal(4), id), 6u);
  EXPECT_EQ(path_distance(VertexLabeling{1, 0, 2}, VertexLabeling::identity(3)), 1u);
}

TEST(PathDistance, SymmetricOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 500; ++rep) {
    const auto a = testing::random_labeling(12, rng);
    const auto b = testing::random_labeling(12, rng);
    ASSERT_EQ(path_distance(a, b), path_distance(b, a));
  }
}

TEST(PathDistance, EqualsOracleForAllPairsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const ConfigurationSpace space(make_family(Family::path, n));
    const ConfigurationGraph cg(space);
    const auto perms = testing::all_permutations(n);
    for (const auto& a : perms) {
      const auto dist = cg.distances_from(space.rank(a));
      for (const auto& b : perms) {
        ASSERT_EQ(path_distance(VertexLabeling(a), VertexLabeling(b)), dist[space.rank(b)])
            << "n=" << n;
      }
    }
  }
}

TEST(PathFlipSequence, Examples) {
  const auto id3 = VertexLabeling::identity(3);
  EXPECT_TRUE(path_flip_sequence(id3, id3).empty());
  EXPECT_EQ(path_flip_sequence(VertexLabeling{1, 0, 2}, id3), (FlipSequence{{0, 1}}));

  const auto seq = path_flip_sequence(reversal(3), id3);
  EXPECT_EQ(seq.size(), 3u);
  EXPECT_EQ(apply_sequence(make_family(Family::path, 3), reversal(3), seq), id3);
}

TEST(PathFlipSequence, OptimalAndMonotone) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + rng() % 15;
    const auto g = make_family(Family::path, n);
    const auto a = testing::random_labeling(n, rng);
    const auto b = testing::random_labeling(n, rng);
    const auto seq = path_flip_sequence(a, b);
    ASSERT_EQ(seq.size(), path_distance(a, b));
    auto cur = a;
    auto residual = path_distance(cur, b);
    for (const auto& f : seq) {
      cur = apply_flip(g, cur, f);
      const auto next = path_distance(cur, b);
      ASSERT_EQ(next + 1, residual);
      residual = next;
    }
    ASSERT_EQ(cur, b);
  }
}

TEST(PathExactT, Examples) {
  const auto id = VertexLabeling::identity(3);
  const VertexLabeling one{1, 0, 2};
  EXPECT_TRUE(path_exact_t_feasible(one, id, 1));
  EXPECT_FALSE(path_exact_t_feasible(one, id, 2));
  EXPECT_TRUE(path_exact_t_feasible(one, id, 3));
  EXPECT_TRUE(path_exact_t_feasible(id, id, 0));
  EXPECT_FALSE(path_exact_t_feasible(reversal(4), VertexLabeling::identity(4), 5));
}

TEST(PathExactT, MatchesOracleWalksUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const ConfigurationSpace space(make_family(Family::path, n));
    std::mt19937_64 rng(n);
    for (int rep = 0; rep < 6; ++rep) {
      const auto a = testing::random_permutation(n, rng);
      const auto b = testing::random_permutation(n, rng);
      for (std::uint64_t t = 0; t <= 10; ++t) {
        ASSERT_EQ(path_exact_t_feasible(VertexLabeling(a), VertexLabeling(b), t),
                  reachable_in_exactly(space, a, b, t))
            << "n=" << n << " t=" << t;
      }
    }
  }
}

TEST(TranspositionOnPath, Examples) {
  EXPECT_EQ(transposition_cost_on_path(2, 3).cost, 1u);
  EXPECT_EQ(transposition_cost_on_path(0, 3).cost, 5u);
  EXPECT_THROW(transposition_cost_on_path(3, 3), InvalidArgument);
  EXPECT_THROW(transposition_cost_on_path(4, 1), InvalidArgument);

  const auto t = transposition_cost_on_path(1, 4);
  EXPECT_EQ(t.cost, 5u);
  const auto g = make_family(Family::path, 6);
  const auto out = apply_sequence(g, VertexLabeling::identity(6), t.flips);
  EXPECT_EQ(out, (VertexLabeling{0, 4, 2, 3, 1, 5}));
}

TEST(TranspositionOnPath, PureTranspositionForAllPairs) {
  const std::size_t n = 8;
  const auto g = make_family(Family::path, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto t = transposition_cost_on_path(i, j);
      ASSERT_EQ(t.cost, 2 * (j - i) - 1);
      const auto out = apply_sequence(g, VertexLabeling::identity(n), t.flips);
      ASSERT_EQ(out.permutation(), Permutation::transposition(n, i, j));
    }
  }
}

}  // namespace
}  // namespace relabel
