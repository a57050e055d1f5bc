#pragma once

// Exact flip distance on the path 0-1-...-(n-1): the inversion count of the relative
// permutation.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "relabel/errors.hpp"
#include "relabel/labeling.hpp"
#include "relabel/perm.hpp"

namespace relabel {

inline std::uint64_t path_distance(const VertexLabeling& l, const VertexLabeling& target) {
  return inversions(relative_permutation(l, target));
}

/// An optimal sequence: the largest out-of-place label is carried right to its home,
/// then the next largest, and so on. Every flip removes exactly one inversion.
inline FlipSequence path_flip_sequence(const VertexLabeling& l, const VertexLabeling& target) {
  auto s = relative_permutation(l, target).vector();
  FlipSequence flips;
  for (std::size_t k = s.size(); k-- > 1;) {
    std::size_t i = 0;
    while (s[i] != k) ++i;
    for (; i < k; ++i) {
      std::swap(s[i], s[i + 1]);
      flips.push_back({i, i + 1});
    }
  }
  return flips;
}

/// Exactly t flips suffice iff t >= distance and t has the distance's parity (a single
/// vertex has no flip to waste, so there only t = 0 works).
inline bool path_exact_t_feasible(const VertexLabeling& l, const VertexLabeling& target,
                                  std::uint64_t t) {
  const auto d = path_distance(l, target);
  if (l.size() < 2) return t == d;
  return t >= d && (t - d) % 2 == 0;
}

struct PathTransposition {
  std::size_t cost = 0;
  FlipSequence flips;
};

/// Exchanges the labels at path positions i < j and restores everything else, in
/// 2(j-i)-1 flips: the label at j walks down to i, then the old label at i walks up to j.
inline PathTransposition transposition_cost_on_path(std::size_t i, std::size_t j) {
  if (i >= j) throw InvalidArgument("transposition on a path needs i < j");
  PathTransposition result;
  for (std::size_t k = j; k > i; --k) result.flips.push_back({k - 1, k});
  for (std::size_t k = i + 1; k < j; ++k) result.flips.push_back({k, k + 1});
  result.cost = result.flips.size();
  return result;
}

}  // namespace relabel
