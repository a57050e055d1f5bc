#pragma once

// Exhaustive breadth-first search over the configuration space of a graph: every
// bijective labeling is a node, and two nodes are adjacent when one legal flip turns one
// into the other. Exact but exponential; every entry point is guarded by a state limit.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"
#include "relabel/perm.hpp"

namespace relabel {

/// 10! states.
inline constexpr std::uint64_t kDefaultCapacity = 3'628'800;

enum class Mode { vertex, edge };

/// Which flips are legal: all of them, or only those moving at least one privileged label.
class FlipRule {
 public:
  static FlipRule unrestricted() { return FlipRule{}; }

  static FlipRule privileged(const std::vector<std::size_t>& labels, std::size_t label_count) {
    if (labels.empty()) throw InvalidArgument("privileged label set must be nonempty");
    FlipRule rule;
    rule.restricted_ = true;
    rule.privileged_.assign(label_count, false);
    for (auto x : labels) {
      if (x >= label_count) throw InvalidArgument("privileged label out of range");
      rule.privileged_[x] = true;
    }
    return rule;
  }

  bool restricted() const noexcept { return restricted_; }
  bool is_privileged(std::size_t label) const {
    return !restricted_ || (label < privileged_.size() && privileged_[label]);
  }
  bool allows(std::size_t a, std::size_t b) const { return is_privileged(a) || is_privileged(b); }

 private:
  bool restricted_ = false;
  std::vector<bool> privileged_;
};

/// The labelings of a graph's vertices (or edges) under a flip rule.
class ConfigurationSpace {
 public:
  using Move = std::pair<std::size_t, std::size_t>;

  explicit ConfigurationSpace(Graph graph, FlipRule rule = FlipRule::unrestricted(),
                              Mode mode = Mode::vertex,
                              std::uint64_t capacity = kDefaultCapacity)
      : graph_(std::move(graph)), rule_(std::move(rule)), mode_(mode) {
    if (mode_ == Mode::vertex) {
      label_count_ = graph_.vertex_count();
      for (const auto& e : graph_.edges()) moves_.emplace_back(e.u, e.v);
    } else {
      // Pairs of edges meeting at a vertex, read directly off the endpoint lists.
      label_count_ = graph_.edge_count();
      for (std::size_t a = 0; a < label_count_; ++a)
        for (std::size_t b = a + 1; b < label_count_; ++b)
          if (graph_.edge(a).shares_endpoint(graph_.edge(b))) moves_.emplace_back(a, b);
    }
    if (label_count_ > 20 || factorial(label_count_) > capacity) {
      throw CapacityError("configuration space has " + std::to_string(label_count_) +
                          "! states, above the limit of " + std::to_string(capacity));
    }
    state_count_ = factorial(label_count_);
  }

  const Graph& graph() const noexcept { return graph_; }
  const FlipRule& rule() const noexcept { return rule_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t label_count() const noexcept { return label_count_; }
  std::uint64_t state_count() const noexcept { return state_count_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }

  std::uint64_t rank(std::span<const std::size_t> labels) const {
    if (labels.size() != label_count_) throw InvalidArgument("labeling size does not match space");
    return lehmer_rank(labels);
  }
  std::uint64_t rank(const Permutation& p) const { return rank(p.images()); }

  std::vector<std::size_t> unrank(std::uint64_t r) const {
    std::vector<std::size_t> labels(label_count_);
    lehmer_unrank(r, labels);
    return labels;
  }

  /// Calls f(move_index, neighbor_rank) for every legal flip out of `labels`.
  /// `labels` is used as scratch and restored before returning.
  template <class F>
  void for_each_neighbor(std::vector<std::size_t>& labels, F&& f) const {
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      const auto [a, b] = moves_[k];
      if (!rule_.allows(labels[a], labels[b])) continue;
      std::swap(labels[a], labels[b]);
      f(k, lehmer_rank(labels));
      std::swap(labels[a], labels[b]);
    }
  }

 private:
  Graph graph_;
  FlipRule rule_;
  Mode mode_;
  std::size_t label_count_ = 0;
  std::uint64_t state_count_ = 1;
  std::vector<Move> moves_;
};

inline constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

/// Distance from `from` to every state, indexed by rank; kUnreached where unreachable.
inline std::vector<std::uint16_t> distances_from(const ConfigurationSpace& space,
                                                 const Permutation& from) {
  std::vector<std::uint16_t> dist(space.state_count(), kUnreached);
  std::vector<std::uint64_t> frontier{space.rank(from)}, next;
  dist[frontier.front()] = 0;
  std::uint16_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (auto r : frontier) {
      auto labels = space.unrank(r);
      space.for_each_neighbor(labels, [&](std::size_t, std::uint64_t nr) {
        if (dist[nr] == kUnreached) {
          dist[nr] = level;
          next.push_back(nr);
        }
      });
    }
    frontier.swap(next);
  }
  return dist;
}

/// Shortest flip count, or nullopt when `to` is unreachable (restricted rules only).
inline std::optional<std::uint64_t> bfs_distance(const ConfigurationSpace& space,
                                                 const Permutation& from, const Permutation& to) {
  const auto target = space.rank(to);
  const auto source = space.rank(from);
  if (source == target) return 0;
  std::vector<bool> seen(space.state_count(), false);
  std::vector<std::uint64_t> frontier{source}, next;
  seen[source] = true;
  for (std::uint64_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    bool found = false;
    for (auto r : frontier) {
      auto labels = space.unrank(r);
      space.for_each_neighbor(labels, [&](std::size_t, std::uint64_t nr) {
        if (seen[nr]) return;
        seen[nr] = true;
        found = found || nr == target;
        next.push_back(nr);
      });
      if (found) return level;
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

/// A shortest sequence of moves (position pairs) from `from` to `to`, if one exists.
inline std::optional<std::vector<ConfigurationSpace::Move>> bfs_path(
    const ConfigurationSpace& space, const Permutation& from, const Permutation& to) {
  constexpr auto kRoot = std::numeric_limits<std::uint16_t>::max() - 1;
  const auto target = space.rank(to);
  std::vector<std::uint16_t> via(space.state_count(), kUnreached);
  std::vector<std::uint64_t> frontier{space.rank(from)}, next;
  via[frontier.front()] = kRoot;
  while (!frontier.empty() && via[target] == kUnreached) {
    next.clear();
    for (auto r : frontier) {
      auto labels = space.unrank(r);
      space.for_each_neighbor(labels, [&](std::size_t k, std::uint64_t nr) {
        if (via[nr] == kUnreached) {
          via[nr] = static_cast<std::uint16_t>(k);
          next.push_back(nr);
        }
      });
    }
    frontier.swap(next);
  }
  if (via[target] == kUnreached) return std::nullopt;
  // Walk back: every flip is an involution, so undoing the recorded move gives the parent.
  std::vector<ConfigurationSpace::Move> moves;
  auto labels = to.vector();
  for (auto r = target; via[r] != kRoot; r = space.rank(labels)) {
    const auto move = space.moves()[via[r]];
    moves.push_back(move);
    std::swap(labels[move.first], labels[move.second]);
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

/// Whether some walk of exactly t flips leads from `from` to `to`. Searches the product
/// of the configuration space with the parity of the walk length, so it does not assume
/// the space is bipartite.
inline bool reachable_in_exactly(const ConfigurationSpace& space, const Permutation& from,
                                 const Permutation& to, std::uint64_t t) {
  const auto n = space.state_count();
  const auto source = space.rank(from);
  const auto target = space.rank(to);
  std::vector<std::uint16_t> dist(2 * n, kUnreached);
  std::vector<std::uint64_t> frontier{2 * source}, next;
  dist[2 * source] = 0;
  std::uint16_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (auto node : frontier) {
      auto labels = space.unrank(node / 2);
      const auto flipped = (node % 2) ^ 1;
      space.for_each_neighbor(labels, [&](std::size_t, std::uint64_t nr) {
        const auto key = 2 * nr + flipped;
        if (dist[key] == kUnreached) {
          dist[key] = level;
          next.push_back(key);
        }
      });
    }
    frontier.swap(next);
  }
  const auto best = dist[2 * target + t % 2];
  if (best == kUnreached || t < best) return false;
  if (t == best || best > 0) return true;
  // Closed walk of positive even length at the source: needs one legal flip to bounce on.
  auto labels = from.vector();
  bool has_move = false;
  space.for_each_neighbor(labels, [&](std::size_t, std::uint64_t) { has_move = true; });
  return has_move;
}

struct ComponentSummary {
  std::uint64_t size = 0;
  /// First members in BFS order, up to the requested limit.
  std::vector<Permutation> members;
};

inline ComponentSummary component(const ConfigurationSpace& space, const Permutation& from,
                                  std::size_t enumerate_limit = 0) {
  const auto dist = distances_from(space, from);
  std::vector<std::pair<std::uint16_t, std::uint64_t>> reached;
  for (std::uint64_t r = 0; r < dist.size(); ++r)
    if (dist[r] != kUnreached) reached.emplace_back(dist[r], r);
  ComponentSummary summary;
  summary.size = reached.size();
  std::sort(reached.begin(), reached.end());
  for (std::size_t i = 0; i < std::min(enumerate_limit, reached.size()); ++i)
    summary.members.emplace_back(space.unrank(reached[i].second));
  return summary;
}

/// Number of states at each distance from `from`, over its reachable component.
inline std::map<std::uint64_t, std::uint64_t> distance_distribution(const ConfigurationSpace& space,
                                                                    const Permutation& from) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (auto d : distances_from(space, from))
    if (d != kUnreached) ++histogram[d];
  return histogram;
}

inline std::uint64_t eccentricity(const ConfigurationSpace& space, const Permutation& from) {
  std::uint64_t best = 0;
  for (auto d : distances_from(space, from))
    if (d != kUnreached) best = std::max<std::uint64_t>(best, d);
  return best;
}

/// Diameter of an unrestricted space. Relabeling is an automorphism of such a space, so
/// the eccentricity of the identity is the diameter.
inline std::uint64_t diameter(const ConfigurationSpace& space) {
  if (space.rule().restricted())
    throw InvalidArgument("diameter is defined here for unrestricted spaces only");
  return eccentricity(space, Permutation::identity(space.label_count()));
}

/// The whole configuration graph held in memory, for many BFS runs over a small space.
class ConfigurationGraph {
 public:
  explicit ConfigurationGraph(const ConfigurationSpace& space) {
    const auto n = space.state_count();
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (std::uint64_t r = 0; r < n; ++r) {
      auto labels = space.unrank(r);
      space.for_each_neighbor(labels, [&](std::size_t, std::uint64_t nr) {
        targets_.push_back(static_cast<std::uint32_t>(nr));
      });
      offsets_.push_back(targets_.size());
    }
  }

  std::uint64_t state_count() const noexcept { return offsets_.size() - 1; }

  std::vector<std::uint16_t> distances_from(std::uint64_t source) const {
    std::vector<std::uint16_t> dist(state_count(), kUnreached);
    std::vector<std::uint32_t> queue;
    queue.reserve(state_count());
    queue.push_back(static_cast<std::uint32_t>(source));
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto r = queue[head];
      for (auto k = offsets_[r]; k < offsets_[r + 1]; ++k) {
        const auto nr = targets_[k];
        if (dist[nr] == kUnreached) {
          dist[nr] = static_cast<std::uint16_t>(dist[r] + 1);
          queue.push_back(nr);
        }
      }
    }
    return dist;
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

}  // namespace relabel
