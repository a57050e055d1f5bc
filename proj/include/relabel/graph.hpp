#pragma once

// Simple undirected graphs, standard families, spanning trees, leaf elimination
// order and line graphs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relabel/errors.hpp"

namespace relabel {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const noexcept {
    return touches(o.u) || touches(o.v);
  }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple undirected graph. Edge order is preserved: edge labelings index into it.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    for (const auto& e : edges_) {
      if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n_) throw InvalidArgument("edge endpoint out of range");
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw InvalidArgument("duplicate edge");
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    const Edge key(a, b);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i] == key) return i;
    return std::nullopt;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    return bfs_order(0).size() == n_;
  }

  /// Vertices reachable from `root`, in BFS order with neighbors visited by index.
  std::vector<Vertex> bfs_order(Vertex root) const {
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> order{root};
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (auto w : adj_[order[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  /// Vertex sequence of the unique shortest path found by BFS (the tree path in a tree).
  std::vector<Vertex> shortest_path(Vertex from, Vertex to) const {
    if (from >= n_ || to >= n_) throw InvalidArgument("vertex out of range");
    std::vector<Vertex> parent(n_, n_);
    parent[from] = from;
    std::queue<Vertex> frontier;
    frontier.push(from);
    while (!frontier.empty() && parent[to] == n_) {
      auto x = frontier.front();
      frontier.pop();
      for (auto w : adj_[x]) {
        if (parent[w] == n_) {
          parent[w] = x;
          frontier.push(w);
        }
      }
    }
    if (parent[to] == n_) throw InvalidArgument("vertices are not connected");
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline void require_connected(const Graph& g) {
  if (!g.is_connected()) throw InvalidArgument("graph is not connected");
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && g.is_connected();
}

inline bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.vertex_count() == 1) return true;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
    leaves += g.degree(v) == 1;
  }
  return leaves == 2;
}

inline bool is_cycle(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return g.is_connected();
}

/// Vertices of a path graph from its lower-indexed endpoint to the other one.
inline std::vector<Vertex> path_walk(const Graph& g) {
  if (!is_path(g)) throw InvalidArgument("graph is not a path");
  Vertex start = 0;
  while (g.vertex_count() > 1 && g.degree(start) != 1) ++start;
  std::vector<Vertex> walk{start};
  while (walk.size() < g.vertex_count()) {
    const Vertex prev = walk.size() > 1 ? walk[walk.size() - 2] : g.vertex_count();
    for (auto w : g.neighbors(walk.back())) {
      if (w != prev) {
        walk.push_back(w);
        break;
      }
    }
  }
  return walk;
}

/// Vertices of a cycle graph starting at 0 and heading to 0's lower neighbor.
inline std::vector<Vertex> cycle_walk(const Graph& g) {
  if (!is_cycle(g)) throw InvalidArgument("graph is not a cycle");
  std::vector<Vertex> walk{0, g.neighbors(0)[0]};
  while (walk.size() < g.vertex_count()) {
    const auto nb = g.neighbors(walk.back());
    walk.push_back(nb[0] == walk[walk.size() - 2] ? nb[1] : nb[0]);
  }
  return walk;
}

enum class Family { path, star, cycle, grid, complete, random_connected };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "star") return Family::star;
  if (name == "cycle") return Family::cycle;
  if (name == "grid") return Family::grid;
  if (name == "complete") return Family::complete;
  if (name == "random_connected" || name == "random") return Family::random_connected;
  return std::nullopt;
}

/// Erdos-Renyi G(n, p), resampled until connected.
inline Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random graph needs n >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
}

/// Canonically indexed family members: path 0-1-..-(n-1), star centered at 0, cycle
/// 0-1-..-(n-1)-0, grid of side n in row-major order, complete graph K_n.
inline Graph make_family(Family family, std::size_t n, std::optional<std::uint64_t> seed = {}) {
  if (n == 0) throw InvalidArgument("family size must be >= 1");
  std::vector<Edge> edges;
  std::size_t vertices = n;
  switch (family) {
    case Family::path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::cycle:
      if (n < 3) throw InvalidArgument("cycle requires n >= 3");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::grid:
      vertices = n * n;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const Vertex v = r * n + c;
          if (c + 1 < n) edges.emplace_back(v, v + 1);
          if (r + 1 < n) edges.emplace_back(v, v + n);
        }
      }
      break;
    case Family::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::random_connected: {
      const double p = n <= 2 ? 1.0 : std::min(1.0, 2.0 * std::log(double(n)) / double(n));
      return random_connected_graph(n, p, seed.value_or(0));
    }
  }
  return Graph(vertices, std::move(edges));
}

/// BFS spanning tree from vertex 0 with neighbors taken in index order; edges sorted.
inline Graph spanning_tree(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  std::vector<bool> seen(n, false);
  if (n > 0) {
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = true;
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop();
      for (auto w : g.neighbors(x)) {
        if (!seen[w]) {
          seen[w] = true;
          edges.emplace_back(x, w);
          frontier.push(w);
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

/// Repeatedly removes the lowest-indexed leaf of the residual tree until one vertex
/// remains, which is placed last. Covers all n vertices.
inline std::vector<Vertex> prufer_elimination_order(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("leaf elimination order requires a tree");
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (order.size() + 1 < n) {
    const auto leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    order.push_back(leaf);
    for (auto w : tree.neighbors(leaf)) {
      if (!removed[w] && --degree[w] == 1) leaves.push(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) order.push_back(v);
  return order;
}

/// Vertex i of the line graph is edge i of `g`; two are adjacent when the edges meet.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (g.edge(i).touches(v)) incident.push_back(i);
    for (std::size_t a = 0; a < incident.size(); ++a)
      for (std::size_t b = a + 1; b < incident.size(); ++b)
        edges.emplace_back(incident[a], incident[b]);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(g.edge_count(), std::move(edges));
}

/// A spanning tree with a vertex of degree >= 3: three edges at the lowest-indexed
/// vertex of degree >= 3, completed by Kruskal over the remaining edges in order.
inline Graph spanning_tree_not_path(const Graph& g) {
  require_connected(g);
  if (is_path(g) || is_cycle(g))
    throw InvalidArgument("paths and cycles have no spanning tree that is not a path");
  const std::size_t n = g.vertex_count();
  Vertex hub = 0;
  while (g.degree(hub) < 3) ++hub;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> chosen;
  auto take = [&](const Edge& e) {
    auto a = find(e.u), b = find(e.v);
    if (a == b) return;
    parent[a] = b;
    chosen.push_back(e);
  };
  for (std::size_t k = 0; k < 3; ++k) take(Edge(hub, g.neighbors(hub)[k]));
  for (const auto& e : g.edges()) take(e);
  std::sort(chosen.begin(), chosen.end());
  return Graph(n, std::move(chosen));
}

}  // namespace relabel
