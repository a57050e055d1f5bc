#pragma once

// Vertex and edge labelings, single flips, flip sequences.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/perm.hpp"

namespace relabel {

struct VertexTag {};
struct EdgeTag {};

/// A bijective labeling: `labels()[x]` is the label on vertex (or edge) x. Labels are
/// exactly {0, ..., size-1}, so a labeling is a permutation read position -> label.
template <class Tag>
class BasicLabeling {
 public:
  BasicLabeling() = default;
  explicit BasicLabeling(Permutation labels) : labels_(std::move(labels)) {}
  explicit BasicLabeling(std::vector<std::size_t> labels) : labels_(std::move(labels)) {}
  BasicLabeling(std::initializer_list<std::size_t> labels) : labels_(labels) {}

  static BasicLabeling identity(std::size_t n) { return BasicLabeling(Permutation::identity(n)); }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t operator[](std::size_t x) const { return labels_[x]; }
  const Permutation& permutation() const noexcept { return labels_; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_.vector(); }

  /// Position holding each label.
  std::vector<std::size_t> positions() const { return labels_.inverse().vector(); }

  friend bool operator==(const BasicLabeling&, const BasicLabeling&) = default;

 private:
  Permutation labels_;
};

using VertexLabeling = BasicLabeling<VertexTag>;
using EdgeLabeling = BasicLabeling<EdgeTag>;

/// Swap of the labels on the endpoints of an edge.
struct VertexFlip {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const VertexFlip&, const VertexFlip&) = default;
};

/// Swap of the labels on two edges (by index) that share an endpoint.
struct EdgeFlip {
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  friend bool operator==(const EdgeFlip&, const EdgeFlip&) = default;
};

using FlipSequence = std::vector<VertexFlip>;
using EdgeFlipSequence = std::vector<EdgeFlip>;

inline bool is_legal(const Graph& g, const VertexFlip& f) { return g.has_edge(f.u, f.v); }

inline bool is_legal(const Graph& g, const EdgeFlip& f) {
  return f.e1 != f.e2 && f.e1 < g.edge_count() && f.e2 < g.edge_count() &&
         g.edge(f.e1).shares_endpoint(g.edge(f.e2));
}

namespace detail {

inline std::pair<std::size_t, std::size_t> slots(const VertexFlip& f) { return {f.u, f.v}; }
inline std::pair<std::size_t, std::size_t> slots(const EdgeFlip& f) { return {f.e1, f.e2}; }

inline std::size_t domain_size(const Graph& g, VertexTag) { return g.vertex_count(); }
inline std::size_t domain_size(const Graph& g, EdgeTag) { return g.edge_count(); }

template <class Tag>
void require_fits(const Graph& g, const BasicLabeling<Tag>& l) {
  if (l.size() != domain_size(g, Tag{}))
    throw InvalidArgument("labeling size " + std::to_string(l.size()) +
                          " does not match the graph (" +
                          std::to_string(domain_size(g, Tag{})) + ")");
}

template <class Tag>
struct flip_for;
template <>
struct flip_for<VertexTag> {
  using type = VertexFlip;
};
template <>
struct flip_for<EdgeTag> {
  using type = EdgeFlip;
};

}  // namespace detail

/// Swaps the two labels a flip touches. Throws InvalidArgument if the flip is not legal
/// on `g`.
template <class Tag>
BasicLabeling<Tag> apply_flip(const Graph& g, const BasicLabeling<Tag>& l,
                              const typename detail::flip_for<Tag>::type& f) {
  detail::require_fits(g, l);
  if (!is_legal(g, f)) throw InvalidArgument("flip does not correspond to adjacent positions");
  auto labels = l.labels();
  const auto [a, b] = detail::slots(f);
  std::swap(labels[a], labels[b]);
  return BasicLabeling<Tag>(std::move(labels));
}

/// Left-to-right application; the first illegal flip raises InvalidFlip with its index.
template <class Tag>
BasicLabeling<Tag> apply_sequence(const Graph& g, const BasicLabeling<Tag>& l,
                                  const std::vector<typename detail::flip_for<Tag>::type>& seq) {
  detail::require_fits(g, l);
  auto labels = l.labels();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!is_legal(g, seq[i])) throw InvalidFlip(i, "not a legal flip on this graph");
    const auto [a, b] = detail::slots(seq[i]);
    std::swap(labels[a], labels[b]);
  }
  return BasicLabeling<Tag>(std::move(labels));
}

/// The labeling `l` after renaming labels so that `target` reads as the identity:
/// result(x) = target^{-1}(l(x)), i.e. the label at x is replaced by the position where
/// the target wants it. Flip distances between l and target equal the distance from the
/// result to the identity.
template <class Tag>
Permutation relative_permutation(const BasicLabeling<Tag>& l, const BasicLabeling<Tag>& target) {
  if (l.size() != target.size()) throw InvalidArgument("labelings differ in size");
  return compose(target.permutation().inverse(), l.permutation());
}

inline EdgeFlipSequence to_edge_flips(const FlipSequence& seq) {
  EdgeFlipSequence out;
  out.reserve(seq.size());
  for (const auto& f : seq) out.push_back({f.u, f.v});
  return out;
}

inline FlipSequence to_vertex_flips(const EdgeFlipSequence& seq) {
  FlipSequence out;
  out.reserve(seq.size());
  for (const auto& f : seq) out.push_back({f.e1, f.e2});
  return out;
}

}  // namespace relabel
