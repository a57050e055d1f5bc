#pragma once

// Instance maps between the vertex and the edge relabeling problems.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"

namespace relabel {

/// Can `from` reach `to` in at most t vertex flips on `graph`?
struct VertexInstance {
  Graph graph;
  VertexLabeling from;
  VertexLabeling to;
  std::uint64_t t = 0;
};

/// Can `from` reach `to` in at most t edge flips on `graph`?
struct EdgeInstance {
  Graph graph;
  EdgeLabeling from;
  EdgeLabeling to;
  std::uint64_t t = 0;
};

inline void validate(const VertexInstance& inst) {
  detail::require_fits(inst.graph, inst.from);
  detail::require_fits(inst.graph, inst.to);
}

inline void validate(const EdgeInstance& inst) {
  detail::require_fits(inst.graph, inst.from);
  detail::require_fits(inst.graph, inst.to);
}

/// Attaches a pendant vertex n+i to every vertex i. Edges keep their indices 0..m-1 and
/// the pendant edge of vertex i gets index m+i. Pendant edges carry the vertex labels;
/// original edge i carries the fixed label n+i in both labelings. Bound becomes 3t.
inline EdgeInstance vertex_to_edge(const VertexInstance& inst) {
  validate(inst);
  const std::size_t n = inst.graph.vertex_count();
  const std::size_t m = inst.graph.edge_count();
  auto edges = inst.graph.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n + v);

  auto labels_for = [&](const VertexLabeling& l) {
    std::vector<std::size_t> labels(m + n);
    for (std::size_t i = 0; i < m; ++i) labels[i] = n + i;
    for (Vertex v = 0; v < n; ++v) labels[m + v] = l[v];
    return EdgeLabeling(std::move(labels));
  };
  return EdgeInstance{Graph(2 * n, std::move(edges)), labels_for(inst.from), labels_for(inst.to),
                      3 * inst.t};
}

/// Edge flips on the pendant construction that reproduce one vertex flip each:
/// pendant(k) <-> {k,l}, {k,l} <-> pendant(l), {k,l} <-> pendant(k).
inline EdgeFlipSequence simulate_vertex_flips(const Graph& g, const FlipSequence& seq) {
  const std::size_t m = g.edge_count();
  EdgeFlipSequence out;
  out.reserve(3 * seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto e = g.edge_index(seq[i].u, seq[i].v);
    if (!e) throw InvalidFlip(i, "not an edge of the source graph");
    const auto pk = m + seq[i].u;
    const auto pl = m + seq[i].v;
    out.push_back({pk, *e});
    out.push_back({*e, pl});
    out.push_back({*e, pk});
  }
  return out;
}

/// Same question on the line graph; edge i becomes vertex i, bound unchanged.
inline VertexInstance edge_to_vertex(const EdgeInstance& inst) {
  validate(inst);
  return VertexInstance{line_graph(inst.graph), VertexLabeling(inst.from.permutation()),
                        VertexLabeling(inst.to.permutation()), inst.t};
}

}  // namespace relabel
