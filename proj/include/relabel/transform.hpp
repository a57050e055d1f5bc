#pragma once

// Arbitrary connected graphs: the constructive spanning-tree transformation with its
// n(n-1)/2 bound, and exact distances through the configuration-space oracle.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"
#include "relabel/oracle.hpp"
#include "relabel/perm.hpp"

namespace relabel {

struct TreeTransformTrace {
  FlipSequence flips;
  /// Flips spent on each vertex of the elimination order, in that order.
  std::vector<std::size_t> per_iteration;
};

/// Fixes vertices one at a time in leaf elimination order of a spanning tree. The label
/// wanted at the current leaf is walked to it along the residual tree; the leaf is then
/// frozen and dropped from the tree.
inline TreeTransformTrace spanning_tree_transform_trace(const Graph& g, const VertexLabeling& l,
                                                        const VertexLabeling& target) {
  detail::require_fits(g, l);
  detail::require_fits(g, target);
  const auto tree = spanning_tree(g);
  const auto order = prufer_elimination_order(tree);
  const std::size_t n = g.vertex_count();

  auto cur = l.labels();
  auto where = l.positions();
  std::vector<bool> frozen(n, false);
  TreeTransformTrace trace;

  for (const auto v : order) {
    const auto wanted = target[v];
    std::size_t spent = 0;
    if (where[wanted] != v) {
      // Path from the holder to v inside the residual tree.
      std::vector<Vertex> parent(n, n);
      std::vector<Vertex> queue{v};
      parent[v] = v;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto w : tree.neighbors(queue[head])) {
          if (!frozen[w] && parent[w] == n) {
            parent[w] = queue[head];
            queue.push_back(w);
          }
        }
      }
      for (auto x = where[wanted]; x != v; x = parent[x]) {
        const auto y = parent[x];
        std::swap(cur[x], cur[y]);
        where[cur[x]] = x;
        where[cur[y]] = y;
        trace.flips.push_back({x, y});
        ++spent;
      }
    }
    frozen[v] = true;
    trace.per_iteration.push_back(spent);
  }
  return trace;
}

inline FlipSequence spanning_tree_transform(const Graph& g, const VertexLabeling& l,
                                            const VertexLabeling& target) {
  return spanning_tree_transform_trace(g, l, target).flips;
}

/// Edge version: the same construction on the line graph, whose vertex flips are exactly
/// the edge flips of `g`.
inline EdgeFlipSequence spanning_tree_transform(const Graph& g, const EdgeLabeling& l,
                                                const EdgeLabeling& target) {
  detail::require_fits(g, l);
  detail::require_fits(g, target);
  if (g.edge_count() == 0) return {};
  const auto lg = line_graph(g);
  return to_edge_flips(spanning_tree_transform(lg, VertexLabeling(l.permutation()),
                                               VertexLabeling(target.permutation())));
}

/// n(n-1)/2 flips always suffice for vertex labelings, m(m-1)/2 for edge labelings.
inline std::uint64_t distance_upper_bound(const Graph& g, Mode mode = Mode::vertex) {
  const std::uint64_t k = mode == Mode::vertex ? g.vertex_count() : g.edge_count();
  return k < 2 ? 0 : k * (k - 1) / 2;
}

/// Minimum number of flips on a general connected graph, from the oracle.
inline std::uint64_t p_G(const Graph& g, const VertexLabeling& l, const VertexLabeling& target,
                         std::uint64_t capacity = kDefaultCapacity) {
  require_connected(g);
  detail::require_fits(g, l);
  detail::require_fits(g, target);
  const ConfigurationSpace space(g, FlipRule::unrestricted(), Mode::vertex, capacity);
  const auto d = bfs_distance(space, l.permutation(), target.permutation());
  if (!d) throw InvalidArgument("target unreachable; graph must be connected");
  return *d;
}

/// Exactly t flips work iff t >= p_G and t has the parity of the relative permutation.
inline bool exact_t_feasible(const Graph& g, const VertexLabeling& l,
                             const VertexLabeling& target, std::uint64_t t,
                             std::uint64_t capacity = kDefaultCapacity) {
  const auto d = p_G(g, l, target, capacity);
  const auto par = parity(relative_permutation(l, target));
  if (g.edge_count() == 0) return t == d;
  return t >= d && (t % 2 == 1) == (par == Parity::odd);
}

/// Largest p_G over all labeling pairs.
inline std::uint64_t p_G_diameter(const Graph& g, std::uint64_t capacity = kDefaultCapacity) {
  require_connected(g);
  return diameter(ConfigurationSpace(g, FlipRule::unrestricted(), Mode::vertex, capacity));
}

}  // namespace relabel
