#pragma once

// Exact flip distance on the star with center 0, where every flip exchanges the label
// at the center with the label at one leaf.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "relabel/errors.hpp"
#include "relabel/labeling.hpp"
#include "relabel/perm.hpp"

namespace relabel {

/// Distance of a star labeling from the identity labeling.
///
/// With the center at home the answer is (moved points) + (nontrivial cycles). Otherwise
/// the center holds i and label 0 sits at leaf j; normalizing 0 back to the center
/// gives q0, and the distance is q0 + 1 when i == j and q0 - 1 when i != j.
inline std::uint64_t star_q(const Permutation& p) {
  if (p.size() == 0) return 0;
  if (p[0] == 0) {
    const auto d = cycle_decomposition(p);
    return d.support_size() + d.cycle_count();
  }
  const auto i = p[0];
  const auto j = p.inverse()[0];
  const auto q0 = star_q(pi_zero(p));
  return i == j ? q0 + 1 : q0 - 1;
}

inline std::uint64_t star_q(const VertexLabeling& l) { return star_q(l.permutation()); }

inline std::uint64_t star_distance(const VertexLabeling& l, const VertexLabeling& target) {
  return star_q(relative_permutation(l, target));
}

/// Greedy center rule on the relative labeling: a foreign label at the center is sent to
/// its home leaf; a home label at the center is exchanged with the lowest misplaced leaf.
/// Per cycle (i1 .. ic) of leaves this produces f_i1 f_i2 .. f_ic f_i1.
inline FlipSequence star_flip_sequence(const VertexLabeling& l, const VertexLabeling& target) {
  auto cur = relative_permutation(l, target).vector();
  FlipSequence flips;
  std::size_t scan = 1;
  for (;;) {
    const auto c = cur[0];
    std::size_t leaf = 0;
    if (c != 0) {
      leaf = c;
    } else {
      while (scan < cur.size() && cur[scan] == scan) ++scan;
      if (scan == cur.size()) break;
      leaf = scan;
    }
    std::swap(cur[0], cur[leaf]);
    flips.push_back({0, leaf});
  }
  return flips;
}

inline bool star_exact_t_feasible(const VertexLabeling& l, const VertexLabeling& target,
                                  std::uint64_t t) {
  const auto q = star_distance(l, target);
  if (l.size() < 2) return t == q;
  return t >= q && (t - q) % 2 == 0;
}

/// Largest distance between two labelings of the n-vertex star: floor(3(n-1)/2).
inline std::uint64_t star_max_distance(std::size_t n) {
  if (n < 2) throw InvalidArgument("star needs n >= 2");
  return 3 * (n - 1) / 2;
}

}  // namespace relabel
