#pragma once

// Relabeling where a flip is legal only if it moves at least one privileged label:
// necessary invariants on paths and cycles, the solvability decider, and constructive
// restricted flip sequences when at most two labels are non-privileged.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"
#include "relabel/oracle.hpp"
#include "relabel/transform.hpp"

namespace relabel {

template <class Tag>
struct BasicPrivilegedInstance {
  Graph graph;
  BasicLabeling<Tag> from;
  BasicLabeling<Tag> to;
  /// Sorted, distinct, nonempty.
  std::vector<std::size_t> privileged;
  std::optional<std::uint64_t> t;
};

using PrivilegedInstance = BasicPrivilegedInstance<VertexTag>;
using EdgePrivilegedInstance = BasicPrivilegedInstance<EdgeTag>;

template <class Tag>
BasicPrivilegedInstance<Tag> make_privileged_instance(Graph graph, BasicLabeling<Tag> from,
                                                      BasicLabeling<Tag> to,
                                                      std::vector<std::size_t> privileged,
                                                      std::optional<std::uint64_t> t = {}) {
  detail::require_fits(graph, from);
  detail::require_fits(graph, to);
  std::sort(privileged.begin(), privileged.end());
  privileged.erase(std::unique(privileged.begin(), privileged.end()), privileged.end());
  if (privileged.empty()) throw InvalidArgument("privileged label set must be nonempty");
  if (privileged.back() >= from.size()) throw InvalidArgument("privileged label out of range");
  return {std::move(graph), std::move(from), std::move(to), std::move(privileged), t};
}

template <class Tag>
FlipRule flip_rule(const BasicPrivilegedInstance<Tag>& inst) {
  return FlipRule::privileged(inst.privileged, inst.from.size());
}

template <class Tag>
std::size_t non_privileged_count(const BasicPrivilegedInstance<Tag>& inst) {
  return inst.from.size() - inst.privileged.size();
}

/// Throws InvalidArgument if the flip is not an edge of the graph.
inline bool is_valid_restricted_flip(const PrivilegedInstance& inst, const VertexLabeling& current,
                                     const VertexFlip& flip) {
  if (!is_legal(inst.graph, flip)) throw InvalidArgument("flip is not an edge of the graph");
  return flip_rule(inst).allows(current[flip.u], current[flip.v]);
}

inline bool is_valid_restricted_flip(const EdgePrivilegedInstance& inst, const EdgeLabeling& current,
                                     const EdgeFlip& flip) {
  if (!is_legal(inst.graph, flip)) throw InvalidArgument("edges do not share an endpoint");
  return flip_rule(inst).allows(current[flip.e1], current[flip.e2]);
}

namespace detail {

inline std::vector<std::size_t> non_privileged_along(const std::vector<Vertex>& walk,
                                                     const VertexLabeling& l,
                                                     const FlipRule& rule) {
  std::vector<std::size_t> seq;
  for (auto v : walk)
    if (!rule.is_privileged(l[v])) seq.push_back(l[v]);
  return seq;
}

}  // namespace detail

/// On a path, restricted flips never reorder non-privileged labels. False means the
/// instance is unsolvable.
inline bool path_order_invariant(const PrivilegedInstance& inst) {
  const auto walk = path_walk(inst.graph);
  const auto rule = flip_rule(inst);
  return detail::non_privileged_along(walk, inst.from, rule) ==
         detail::non_privileged_along(walk, inst.to, rule);
}

/// On a cycle with at least three non-privileged labels, restricted flips keep their
/// cyclic order. False means the instance is unsolvable.
inline bool cycle_orientation_invariant(const PrivilegedInstance& inst) {
  const auto walk = cycle_walk(inst.graph);
  if (non_privileged_count(inst) < 3)
    throw InvalidArgument("orientation invariant needs at least three non-privileged labels");
  const auto rule = flip_rule(inst);
  const auto a = detail::non_privileged_along(walk, inst.from, rule);
  const auto b = detail::non_privileged_along(walk, inst.to, rule);
  const auto start = std::find(a.begin(), a.end(), b.front());
  std::vector<std::size_t> rotated(start, a.end());
  rotated.insert(rotated.end(), a.begin(), start);
  return rotated == b;
}

namespace detail {

/// Builds restricted flip sequences on a tree while tracking the current labeling.
class TreeSwapper {
 public:
  TreeSwapper(const Graph& tree, std::vector<std::size_t> labels, FlipRule rule)
      : tree_(tree), labels_(std::move(labels)), rule_(std::move(rule)) {}

  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  FlipSequence take_flips() { return std::move(flips_); }

  /// Transposes the labels at u and v along their tree path in 2d-1 flips. Needs at
  /// most one non-privileged label on the path.
  void sw(Vertex u, Vertex v) {
    if (u == v) return;
    const auto p = tree_.shortest_path(u, v);
    std::size_t free_labels = 0;
    for (auto x : p) free_labels += !rule_.is_privileged(labels_[x]);
    if (free_labels > 1)
      throw InvalidArgument("privileged swap needs at most one non-privileged label on the path");
    const std::size_t d = p.size() - 1;
    for (std::size_t k = d; k > 0; --k) flip(p[k - 1], p[k]);
    for (std::size_t k = 1; k < d; ++k) flip(p[k], p[k + 1]);
  }

  /// Transposes the labels at u and v under any placement of (at most) two
  /// non-privileged labels. The tree must not be a path.
  void swap(Vertex u, Vertex v) {
    if (u == v) return;
    const auto p = tree_.shortest_path(u, v);
    std::vector<std::size_t> free_at;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (!rule_.is_privileged(labels_[p[k]])) free_at.push_back(k);

    if (free_at.size() <= 1) {
      sw(u, v);
      return;
    }
    const bool u_free = free_at.front() == 0;
    const bool v_free = free_at.back() == p.size() - 1;
    if (u_free && v_free) {
      swap_free_endpoints(u, v, p);
      return;
    }
    const Vertex x = p[free_at.front()];
    const Vertex y = p[free_at.back()];
    if (u_free) {
      sw(y, v);
      swap_free_endpoints(u, v, tree_.shortest_path(u, v));
      sw(u, y);
    } else if (v_free) {
      sw(u, x);
      swap_free_endpoints(u, v, tree_.shortest_path(u, v));
      sw(x, v);
    } else {
      sw(u, x);
      sw(x, v);
      sw(u, x);
    }
  }

 private:
  void flip(Vertex a, Vertex b) {
    std::swap(labels_[a], labels_[b]);
    flips_.push_back({a, b});
  }

  /// Farthest vertex from `start` without stepping onto `blocked`; ties to lowest index.
  Vertex farthest_avoiding(Vertex start, Vertex blocked) const {
    const std::size_t n = tree_.vertex_count();
    std::vector<std::size_t> dist(n, n);
    std::vector<Vertex> queue{start};
    dist[start] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto w : tree_.neighbors(queue[head])) {
        if (w != blocked && dist[w] == n) {
          dist[w] = dist[queue[head]] + 1;
          queue.push_back(w);
        }
      }
    }
    Vertex best = start;
    for (auto x : queue)
      if (dist[x] > dist[best] || (dist[x] == dist[best] && x < best)) best = x;
    return best;
  }

  /// Both u and v hold non-privileged labels. Extend P(u,v) to a maximal path P* from
  /// u' to v', detour through a neighbor w' of an inner branch vertex w of P*:
  /// SW(u,u') SW(v,v') SW(u',w') SW(u',v') SW(v',w') SW(u,u') SW(v,v').
  void swap_free_endpoints(Vertex u, Vertex v, const std::vector<Vertex>& p) {
    const Vertex u_end = farthest_avoiding(u, p[1]);
    const Vertex v_end = farthest_avoiding(v, p[p.size() - 2]);
    const auto spine = tree_.shortest_path(u_end, v_end);
    std::vector<bool> on_spine(tree_.vertex_count(), false);
    for (auto x : spine) on_spine[x] = true;

    std::optional<Vertex> branch;
    for (std::size_t k = 1; k + 1 < spine.size(); ++k)
      if (tree_.degree(spine[k]) >= 3 && (!branch || spine[k] < *branch)) branch = spine[k];
    if (!branch) throw InvalidArgument("tree is a path; no branch vertex for the detour");
    Vertex detour = tree_.vertex_count();
    for (auto w : tree_.neighbors(*branch))
      if (!on_spine[w]) {
        detour = w;
        break;
      }

    sw(u, u_end);
    sw(v, v_end);
    sw(u_end, detour);
    sw(u_end, v_end);
    sw(v_end, detour);
    sw(u, u_end);
    sw(v, v_end);
  }

  const Graph& tree_;
  std::vector<std::size_t> labels_;
  FlipRule rule_;
  FlipSequence flips_;
};

inline void require_tree(const Graph& g) {
  if (!is_tree(g)) throw InvalidArgument("graph is not a tree");
}

}  // namespace detail

/// Exactly 2d(u,v)-1 restricted flips (none when u == v) that exchange the labels at u
/// and v and leave all others in place.
inline FlipSequence sw_swap(const Graph& tree, Vertex u, Vertex v, const VertexLabeling& l,
                            const std::vector<std::size_t>& privileged) {
  detail::require_tree(tree);
  detail::require_fits(tree, l);
  detail::TreeSwapper swapper(tree, l.labels(), FlipRule::privileged(privileged, l.size()));
  swapper.sw(u, v);
  return swapper.take_flips();
}

/// Restricted flips exchanging the labels at u and v on a tree that is not a path, with
/// at most two non-privileged labels anywhere.
inline FlipSequence tree_swap_sequence(const Graph& tree, Vertex u, Vertex v,
                                       const VertexLabeling& l,
                                       const std::vector<std::size_t>& privileged) {
  detail::require_tree(tree);
  detail::require_fits(tree, l);
  if (is_path(tree)) throw InvalidArgument("tree swap requires a tree that is not a path");
  if (u == v) throw InvalidArgument("tree swap requires distinct vertices");
  const auto rule = FlipRule::privileged(privileged, l.size());
  std::size_t free_labels = 0;
  for (std::size_t x = 0; x < l.size(); ++x) free_labels += !rule.is_privileged(x);
  if (free_labels > 2) throw InvalidArgument("tree swap supports at most two non-privileged labels");
  detail::TreeSwapper swapper(tree, l.labels(), rule);
  swapper.swap(u, v);
  return swapper.take_flips();
}

enum class Answer { yes, no, unknown };
enum class Method { theorem, invariant, oracle, none };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "unknown";
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::theorem: return "theorem";
    case Method::invariant: return "invariant";
    case Method::oracle: return "oracle";
    case Method::none: return "none";
  }
  return "none";
}

struct Decision {
  Answer answer = Answer::unknown;
  Method method = Method::none;
  friend bool operator==(const Decision&, const Decision&) = default;
};

/// Decides solvability from structure alone where a characterization applies:
///   at most one non-privileged label: every flip is legal, yes;
///   exactly two, graph on n >= 4 vertices that is not a path: yes;
///   path whose non-privileged order differs between from and to: no;
///   cycle with >= 3 non-privileged labels whose cyclic order differs: no;
/// and returns unknown otherwise.
inline Decision solvable(const PrivilegedInstance& inst) {
  require_connected(inst.graph);
  const auto k = non_privileged_count(inst);
  if (inst.from == inst.to || k <= 1) return {Answer::yes, Method::theorem};
  const bool path = is_path(inst.graph);
  if (k == 2 && !path && inst.graph.vertex_count() >= 4) return {Answer::yes, Method::theorem};
  if (path && !path_order_invariant(inst)) return {Answer::no, Method::invariant};
  if (k >= 3 && is_cycle(inst.graph) && !cycle_orientation_invariant(inst))
    return {Answer::no, Method::invariant};
  return {Answer::unknown, Method::none};
}

/// solvable(), falling back to restricted breadth-first search when undecided.
inline Decision decide(const PrivilegedInstance& inst, std::uint64_t capacity = kDefaultCapacity) {
  const auto d = solvable(inst);
  if (d.answer != Answer::unknown) return d;
  const ConfigurationSpace space(inst.graph, flip_rule(inst), Mode::vertex, capacity);
  const bool reached = bfs_distance(space, inst.from.permutation(), inst.to.permutation()).has_value();
  return {reached ? Answer::yes : Answer::no, Method::oracle};
}

inline PrivilegedInstance to_line_graph_instance(const EdgePrivilegedInstance& inst) {
  return {line_graph(inst.graph), VertexLabeling(inst.from.permutation()),
          VertexLabeling(inst.to.permutation()), inst.privileged, inst.t};
}

/// Edge variant: restricted edge flips are restricted vertex flips on the line graph.
inline Decision edge_privileged_solvable(const EdgePrivilegedInstance& inst) {
  require_connected(inst.graph);
  if (inst.graph.edge_count() == 0) return {Answer::yes, Method::theorem};
  return solvable(to_line_graph_instance(inst));
}

/// Edge variant with the oracle fallback run natively on edge flips.
inline Decision decide(const EdgePrivilegedInstance& inst, std::uint64_t capacity = kDefaultCapacity) {
  const auto d = edge_privileged_solvable(inst);
  if (d.answer != Answer::unknown) return d;
  const ConfigurationSpace space(inst.graph, flip_rule(inst), Mode::edge, capacity);
  const bool reached = bfs_distance(space, inst.from.permutation(), inst.to.permutation()).has_value();
  return {reached ? Answer::yes : Answer::no, Method::oracle};
}

namespace detail {

/// Walks the label at `from` to `to` along a shortest path in g avoiding `blocked`.
inline void walk_label(const Graph& g, std::vector<std::size_t>& labels, Vertex from, Vertex to,
                       Vertex blocked, FlipSequence& flips) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, n);
  std::vector<Vertex> queue{to};
  parent[to] = to;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto w : g.neighbors(queue[head]))
      if (w != blocked && parent[w] == n) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  if (parent[from] == n) throw std::logic_error("no route for label");
  for (auto x = from; x != to; x = parent[x]) {
    std::swap(labels[x], labels[parent[x]]);
    flips.push_back({x, parent[x]});
  }
}

/// Cycle with two non-privileged labels: bring each home around the other, then finish
/// on the spanning path, which never needs to pass one non-privileged label over another.
inline FlipSequence cycle_strategy(const PrivilegedInstance& inst, const FlipRule& rule) {
  const auto& g = inst.graph;
  auto cur = inst.from.labels();
  std::vector<std::size_t> free_labels;
  for (std::size_t x = 0; x < cur.size(); ++x)
    if (!rule.is_privileged(x)) free_labels.push_back(x);
  const auto home = inst.to.positions();
  const auto first = free_labels[0], second = free_labels[1];
  auto pos = [&](std::size_t label) {
    return static_cast<Vertex>(std::find(cur.begin(), cur.end(), label) - cur.begin());
  };

  FlipSequence flips;
  if (pos(second) == home[first]) {
    const auto y = pos(second);
    const auto nb = g.neighbors(y);
    const Vertex step = nb[0] != pos(first) ? nb[0] : nb[1];
    std::swap(cur[y], cur[step]);
    flips.push_back({y, step});
  }
  walk_label(g, cur, pos(first), home[first], pos(second), flips);
  walk_label(g, cur, pos(second), home[second], home[first], flips);
  const auto rest = spanning_tree_transform(g, VertexLabeling(cur), inst.to);
  flips.insert(flips.end(), rest.begin(), rest.end());
  return flips;
}

}  // namespace detail

/// A restricted flip sequence from `from` to `to` (no minimality claim). Requires at most
/// two non-privileged labels. Throws Unsolvable when no such sequence exists.
inline FlipSequence privileged_transform(const PrivilegedInstance& inst) {
  require_connected(inst.graph);
  const auto k = non_privileged_count(inst);
  if (k > 2) throw InvalidArgument("constructive transform supports at most two non-privileged labels");
  if (inst.from == inst.to) return {};
  const auto rule = flip_rule(inst);
  const auto& g = inst.graph;

  FlipSequence flips;
  if (k <= 1) {
    flips = spanning_tree_transform(g, inst.from, inst.to);
  } else if (is_path(g)) {
    // Restricted flips keep the non-privileged order, and with that order matching the
    // target, routing labels to successive endpoints never crosses two of them.
    if (!path_order_invariant(inst))
      throw Unsolvable("non-privileged labels appear in a different order on the path");
    flips = spanning_tree_transform(g, inst.from, inst.to);
  } else if (is_cycle(g)) {
    flips = detail::cycle_strategy(inst, rule);
  } else {
    const auto tree = spanning_tree_not_path(g);
    detail::TreeSwapper swapper(tree, inst.from.labels(), rule);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto& cur = swapper.labels();
      if (cur[v] == inst.to[v]) continue;
      const auto holder = static_cast<Vertex>(
          std::find(cur.begin(), cur.end(), inst.to[v]) - cur.begin());
      swapper.swap(v, holder);
    }
    flips = swapper.take_flips();
  }

  auto check = inst.from.labels();
  for (const auto& f : flips) {
    if (!g.has_edge(f.u, f.v) || !rule.allows(check[f.u], check[f.v]))
      throw std::logic_error("constructed sequence contains an illegal restricted flip");
    std::swap(check[f.u], check[f.v]);
  }
  if (check != inst.to.labels()) throw std::logic_error("constructed sequence misses the target");
  return flips;
}

inline EdgeFlipSequence privileged_transform(const EdgePrivilegedInstance& inst) {
  require_connected(inst.graph);
  return to_edge_flips(privileged_transform(to_line_graph_instance(inst)));
}

/// Sliding puzzle on a side x side board as a privileged instance. Boards list the
/// cell contents row by row with tiles 0..side^2-2 and the blank as side^2-1, which is
/// the only privileged label.
inline PrivilegedInstance puzzle_instance(std::size_t side, const std::vector<std::size_t>& b1,
                                          const std::vector<std::size_t>& b2, std::uint64_t k) {
  if (side < 1) throw InvalidArgument("board side must be >= 1");
  const auto cells = side * side;
  if (b1.size() != cells || b2.size() != cells)
    throw InvalidArgument("board must have side*side cells");
  VertexLabeling from(b1), to(b2);
  return make_privileged_instance(make_family(Family::grid, side), std::move(from), std::move(to),
                                  {cells - 1}, k);
}

}  // namespace relabel
