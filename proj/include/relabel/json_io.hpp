#pragma once

// JSON encodings:
//   graph            {"n": 4, "edges": [[0,1], [1,2], [2,3]]}
//   vertex labeling  {"labels": [3,2,1,0]}
//   edge labeling    {"edge_labels": [1,0,2]}
//   permutation      [2,0,1]
//   flip sequence    {"flips": [[0,1], ...]}  (+ "kind": "edge" for edge flips)
//   instance         {"kind": "vertex"|"edge", "graph": ..., "from": ..., "to": ...,
//                     "t": 3, "privileged": [0, 1]}   ("t", "privileged" optional)
// Indices are 0-based; `offset` = 1 renders 1-based output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relabel/errors.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"
#include "relabel/perm.hpp"
#include "relabel/privileged.hpp"
#include "relabel/reductions.hpp"

namespace relabel::io {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::size_t> index_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + ": expected an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw InvalidArgument(std::string(what) + ": expected nonnegative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> index_pair(const json& j, const char* what) {
  const auto v = index_array(j, what);
  if (v.size() != 2) throw InvalidArgument(std::string(what) + ": expected a pair");
  return {v[0], v[1]};
}

inline json shifted(const std::vector<std::size_t>& v, std::size_t offset) {
  json out = json::array();
  for (auto x : v) out.push_back(x + offset);
  return out;
}

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

inline Graph graph_from_json(const json& j) {
  const auto& n = detail::member(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0) throw InvalidArgument("n: expected integer");
  std::vector<Edge> edges;
  for (const auto& e : detail::member(j, "edges")) {
    const auto [u, v] = detail::index_pair(e, "edges");
    edges.emplace_back(u, v);
  }
  return Graph(n.get<std::size_t>(), std::move(edges));
}

inline json to_json(const Graph& g, std::size_t offset = 0) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Permutation permutation_from_json(const json& j) {
  return Permutation(detail::index_array(j, "permutation"));
}

inline json to_json(const Permutation& p, std::size_t offset = 0) {
  return detail::shifted(p.vector(), offset);
}

/// Accepts {"labels": [...]} or a bare array.
inline VertexLabeling vertex_labeling_from_json(const json& j) {
  if (j.is_array()) return VertexLabeling(detail::index_array(j, "labels"));
  return VertexLabeling(detail::index_array(detail::member(j, "labels"), "labels"));
}

/// Accepts {"edge_labels": [...]} or a bare array.
inline EdgeLabeling edge_labeling_from_json(const json& j) {
  if (j.is_array()) return EdgeLabeling(detail::index_array(j, "edge_labels"));
  return EdgeLabeling(detail::index_array(detail::member(j, "edge_labels"), "edge_labels"));
}

inline bool is_edge_labeling(const json& j) { return j.is_object() && j.contains("edge_labels"); }

inline json to_json(const VertexLabeling& l, std::size_t offset = 0) {
  return {{"labels", detail::shifted(l.labels(), offset)}};
}

inline json to_json(const EdgeLabeling& l, std::size_t offset = 0) {
  return {{"edge_labels", detail::shifted(l.labels(), offset)}};
}

inline json flips_json(const FlipSequence& seq, std::size_t offset = 0) {
  json flips = json::array();
  for (const auto& f : seq) flips.push_back({f.u + offset, f.v + offset});
  return flips;
}

inline json flips_json(const EdgeFlipSequence& seq, std::size_t offset = 0) {
  json flips = json::array();
  for (const auto& f : seq) flips.push_back({f.e1 + offset, f.e2 + offset});
  return flips;
}

inline json to_json(const FlipSequence& seq, std::size_t offset = 0) {
  return {{"flips", flips_json(seq, offset)}};
}

inline json to_json(const EdgeFlipSequence& seq, std::size_t offset = 0) {
  return {{"flips", flips_json(seq, offset)}, {"kind", "edge"}};
}

inline bool is_edge_sequence(const json& j) {
  return j.is_object() && j.value("kind", std::string("vertex")) == "edge";
}

inline FlipSequence flip_sequence_from_json(const json& j) {
  FlipSequence seq;
  for (const auto& f : detail::member(j, "flips")) {
    const auto [u, v] = detail::index_pair(f, "flips");
    seq.push_back({u, v});
  }
  return seq;
}

inline EdgeFlipSequence edge_flip_sequence_from_json(const json& j) {
  return to_edge_flips(flip_sequence_from_json(j));
}

/// Instance file contents, before committing to the vertex or edge reading.
struct InstanceDocument {
  bool edge = false;
  Graph graph;
  json from;
  json to;
  std::uint64_t t = 0;
  bool has_t = false;
  std::optional<std::vector<std::size_t>> privileged;
};

inline InstanceDocument instance_from_json(const json& j) {
  InstanceDocument doc;
  const auto kind = j.value("kind", std::string("vertex"));
  if (kind != "vertex" && kind != "edge") throw InvalidArgument("kind must be vertex or edge");
  doc.edge = kind == "edge";
  doc.graph = graph_from_json(detail::member(j, "graph"));
  doc.from = detail::member(j, "from");
  doc.to = detail::member(j, "to");
  if (j.contains("t") && !j.at("t").is_null()) {
    if (!j.at("t").is_number_integer() || j.at("t").get<long long>() < 0)
      throw InvalidArgument("t: expected nonnegative integer");
    doc.t = j.at("t").get<std::uint64_t>();
    doc.has_t = true;
  }
  if (j.contains("privileged") && !j.at("privileged").is_null())
    doc.privileged = detail::index_array(j.at("privileged"), "privileged");
  return doc;
}

inline VertexInstance vertex_instance(const InstanceDocument& doc) {
  VertexInstance inst{doc.graph, vertex_labeling_from_json(doc.from),
                      vertex_labeling_from_json(doc.to), doc.t};
  validate(inst);
  return inst;
}

inline EdgeInstance edge_instance(const InstanceDocument& doc) {
  EdgeInstance inst{doc.graph, edge_labeling_from_json(doc.from), edge_labeling_from_json(doc.to),
                    doc.t};
  validate(inst);
  return inst;
}

inline json to_json(const VertexInstance& inst, std::size_t offset = 0) {
  return {{"kind", "vertex"}, {"graph", to_json(inst.graph, offset)},
          {"from", to_json(inst.from, offset)}, {"to", to_json(inst.to, offset)},
          {"t", inst.t}};
}

inline json to_json(const EdgeInstance& inst, std::size_t offset = 0) {
  return {{"kind", "edge"}, {"graph", to_json(inst.graph, offset)},
          {"from", to_json(inst.from, offset)}, {"to", to_json(inst.to, offset)},
          {"t", inst.t}};
}

template <class Tag>
json to_json(const BasicPrivilegedInstance<Tag>& inst, std::size_t offset = 0) {
  json j = {{"kind", std::is_same_v<Tag, EdgeTag> ? "edge" : "vertex"},
            {"graph", to_json(inst.graph, offset)},
            {"from", to_json(inst.from, offset)},
            {"to", to_json(inst.to, offset)},
            {"privileged", detail::shifted(inst.privileged, offset)}};
  j["t"] = inst.t ? json(*inst.t) : json(nullptr);
  return j;
}

}  // namespace relabel::io
