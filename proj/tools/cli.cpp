#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "relabel/json_io.hpp"
#include "relabel/relabel.hpp"

namespace relabel::cli {
namespace {

using io::json;

struct Options {
  std::uint64_t seed = 0;
  bool one_based = false;
  bool verbose = false;
  std::optional<std::uint64_t> capacity_override;

  std::uint64_t capacity() const { return capacity_override.value_or(kDefaultCapacity); }
  std::size_t offset() const { return one_based ? 1 : 0; }
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return io::parse(text.str());
}

/// A labeling file in either the vertex or the edge encoding.
struct LabelFile {
  Permutation labels;
  bool edge = false;
};

LabelFile read_labels(const std::string& path) {
  const auto j = read_json(path);
  if (io::is_edge_labeling(j)) return {io::edge_labeling_from_json(j).permutation(), true};
  return {io::vertex_labeling_from_json(j).permutation(), false};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// ---------------------------------------------------------------- graph shapes

/// Center first, then the leaves, when g is a star.
std::optional<std::vector<Vertex>> star_order(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0 || g.edge_count() != n - 1) return std::nullopt;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    std::vector<Vertex> order{c};
    for (Vertex v = 0; v < n; ++v)
      if (v != c) order.push_back(v);
    return order;
  }
  return std::nullopt;
}

/// The labeling read in `order`, so that position i holds the label of vertex order[i].
VertexLabeling along(const std::vector<Vertex>& order, const VertexLabeling& l) {
  std::vector<std::size_t> labels(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) labels[i] = l[order[i]];
  return VertexLabeling(std::move(labels));
}

FlipSequence back(const std::vector<Vertex>& order, FlipSequence seq) {
  for (auto& f : seq) f = {order[f.u], order[f.v]};
  return seq;
}

// ---------------------------------------------------------------- distance / transform

struct Solution {
  std::string method;
  bool exact = true;
  std::uint64_t distance = 0;
  FlipSequence flips;
  /// Whether exactly t flips work; nullopt when the method cannot tell.
  std::optional<bool> exactly_t;
};

std::string resolve_method(const std::string& method, const Graph& g, std::uint64_t capacity) {
  if (method != "auto") return method;
  if (is_path(g)) return "path";
  if (star_order(g)) return "star";
  const auto n = g.vertex_count();
  return n <= 20 && factorial(n) <= capacity ? "bfs" : "tree-bound";
}

bool parity_matches(const VertexLabeling& a, const VertexLabeling& b, std::uint64_t t) {
  return (t % 2 == 1) == (parity(relative_permutation(a, b)) == Parity::odd);
}

/// Vertex relabeling on g with the requested method. Edge problems are solved on the
/// line graph before calling this.
Solution solve(const Graph& g, const VertexLabeling& a, const VertexLabeling& b,
               const std::string& requested, bool want_flips, std::optional<std::uint64_t> t,
               std::uint64_t capacity) {
  require_connected(g);
  Solution s;
  s.method = resolve_method(requested, g, capacity);
  if (s.method == "path") {
    if (!is_path(g)) throw InvalidArgument("--method path needs a path graph");
    const auto order = path_walk(g);
    const auto pa = along(order, a), pb = along(order, b);
    s.distance = path_distance(pa, pb);
    if (want_flips) s.flips = back(order, path_flip_sequence(pa, pb));
    if (t) s.exactly_t = path_exact_t_feasible(pa, pb, *t);
  } else if (s.method == "star") {
    const auto order = star_order(g);
    if (!order) throw InvalidArgument("--method star needs a star graph");
    const auto sa = along(*order, a), sb = along(*order, b);
    s.distance = star_distance(sa, sb);
    if (want_flips) s.flips = back(*order, star_flip_sequence(sa, sb));
    if (t) s.exactly_t = star_exact_t_feasible(sa, sb, *t);
  } else if (s.method == "bfs") {
    const ConfigurationSpace space(g, FlipRule::unrestricted(), Mode::vertex, capacity);
    if (want_flips) {
      const auto moves = bfs_path(space, a.permutation(), b.permutation());
      for (auto [u, v] : *moves) s.flips.push_back({u, v});
      s.distance = s.flips.size();
    } else {
      s.distance = *bfs_distance(space, a.permutation(), b.permutation());
    }
    if (t) {
      s.exactly_t = g.edge_count() == 0 ? *t == s.distance
                                        : *t >= s.distance && parity_matches(a, b, *t);
    }
  } else if (s.method == "tree-bound") {
    s.exact = false;
    s.flips = spanning_tree_transform(g, a, b);
    s.distance = s.flips.size();
    if (t) {
      // Parity is exact; the length is only an upper bound on the distance.
      if (!parity_matches(a, b, *t) || (g.edge_count() == 0 && *t != 0))
        s.exactly_t = false;
      else if (*t >= s.distance)
        s.exactly_t = true;
    }
  } else {
    throw InvalidArgument("unknown method " + s.method);
  }
  return s;
}

struct PairArgs {
  std::string graph, from, to, method = "auto";
  std::optional<std::uint64_t> t;
};

/// Loads graph and labelings; edge labelings are moved onto the line graph.
struct LoadedPair {
  Graph graph;      // graph the flips act on (the line graph for edge labelings)
  Graph original;
  bool edge = false;
  VertexLabeling from, to;
};

LoadedPair load_pair(const PairArgs& args) {
  LoadedPair p;
  p.original = io::graph_from_json(read_json(args.graph));
  auto a = read_labels(args.from);
  auto b = read_labels(args.to);
  if (a.edge != b.edge) throw InvalidArgument("--from and --to use different labeling kinds");
  p.edge = a.edge;
  if (p.edge) {
    detail::require_fits(p.original, EdgeLabeling(a.labels));
    detail::require_fits(p.original, EdgeLabeling(b.labels));
    if (p.original.edge_count() == 0) throw InvalidArgument("graph has no edges");
    p.graph = line_graph(p.original);
  } else {
    p.graph = p.original;
  }
  p.from = VertexLabeling(std::move(a.labels));
  p.to = VertexLabeling(std::move(b.labels));
  detail::require_fits(p.graph, p.from);
  detail::require_fits(p.graph, p.to);
  return p;
}

int cmd_distance(const Options& opt, const PairArgs& args, std::ostream& out, std::ostream& err) {
  const auto p = load_pair(args);
  const auto s = solve(p.graph, p.from, p.to, args.method, false, args.t, opt.capacity());
  json j = {{"distance", s.distance}, {"exact", s.exact}, {"method", s.method}};
  if (!s.exact) j["upper_bound"] = distance_upper_bound(p.graph);
  if (args.t) {
    j["t"] = *args.t;
    j["exactly_t"] = s.exactly_t ? json(*s.exactly_t) : json(nullptr);
  }
  if (opt.verbose) {
    err << std::left << std::setw(10) << "labels" << std::setw(12) << "method" << "distance\n"
        << std::setw(10) << p.from.size() << std::setw(12) << s.method << s.distance
        << (s.exact ? "" : " (upper bound)") << '\n';
  }
  emit(out, j);
  return s.exactly_t == false ? kNo : kOk;
}

int cmd_transform(const Options& opt, const PairArgs& args, std::ostream& out, std::ostream& err) {
  const auto p = load_pair(args);
  const auto s = solve(p.graph, p.from, p.to, args.method, true, std::nullopt, opt.capacity());
  json j = {{"length", s.flips.size()}, {"method", s.method}, {"optimal", s.exact}};
  if (p.edge) {
    const auto seq = to_edge_flips(s.flips);
    if (apply_sequence(p.original, EdgeLabeling(p.from.permutation()), seq) !=
        EdgeLabeling(p.to.permutation()))
      throw std::logic_error("flip sequence does not reach the target");
    j["flips"] = io::flips_json(seq, opt.offset());
    j["kind"] = "edge";
  } else {
    if (apply_sequence(p.original, p.from, s.flips) != p.to)
      throw std::logic_error("flip sequence does not reach the target");
    j["flips"] = io::flips_json(s.flips, opt.offset());
  }
  if (opt.verbose) {
    err << "step  flip\n";
    for (std::size_t i = 0; i < s.flips.size(); ++i)
      err << std::left << std::setw(6) << i + 1 << s.flips[i].u + opt.offset() << ' '
          << s.flips[i].v + opt.offset() << '\n';
  }
  emit(out, j);
  return kOk;
}

// ---------------------------------------------------------------- privileged

json witness_json(const std::vector<ConfigurationSpace::Move>& moves, std::size_t offset) {
  json flips = json::array();
  for (auto [a, b] : moves) flips.push_back({a + offset, b + offset});
  return flips;
}

template <class Tag>
int answer_privileged(const Options& opt, const BasicPrivilegedInstance<Tag>& inst,
                      std::ostream& out, std::ostream& err) {
  constexpr bool edge = std::is_same_v<Tag, EdgeTag>;
  const Mode mode = edge ? Mode::edge : Mode::vertex;
  json j = {{"answer", "unknown"}, {"method", "none"}, {"witness", nullptr}};

  Decision d;
  try {
    d = decide(inst, opt.capacity());
  } catch (const CapacityError&) {
    emit(out, j);
    throw;
  }

  json witness = nullptr;
  if (d.answer == Answer::yes && inst.t) {
    // A length bound turns this into a search problem; only the oracle answers it.
    const ConfigurationSpace space(inst.graph, flip_rule(inst), mode, opt.capacity());
    const auto moves = *bfs_path(space, inst.from.permutation(), inst.to.permutation());
    j["distance"] = moves.size();
    if (moves.size() > *inst.t) {
      d = {Answer::no, Method::oracle};
    } else {
      d.method = Method::oracle;
      witness = witness_json(moves, opt.offset());
    }
  } else if (d.answer == Answer::yes && non_privileged_count(inst) <= 2) {
    witness = io::flips_json(privileged_transform(inst), opt.offset());
  } else if (d.answer == Answer::yes) {
    try {
      const ConfigurationSpace space(inst.graph, flip_rule(inst), mode, opt.capacity());
      witness = witness_json(*bfs_path(space, inst.from.permutation(), inst.to.permutation()),
                                  opt.offset());
    } catch (const CapacityError&) {
      if (opt.verbose) err << "no witness: state space above the limit\n";
    }
  }
  j["answer"] = to_string(d.answer);
  j["method"] = to_string(d.method);
  j["witness"] = witness;
  if (opt.verbose) {
    err << "labels " << inst.from.size() << ", non-privileged " << non_privileged_count(inst)
        << ", answer " << to_string(d.answer) << " via " << to_string(d.method) << '\n';
  }
  emit(out, j);
  return d.answer == Answer::yes ? kOk : kNo;
}

int cmd_solvable(const Options& opt, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  const auto doc = io::instance_from_json(read_json(path));
  if (!doc.privileged) throw InvalidArgument("instance has no \"privileged\" label list");
  const std::optional<std::uint64_t> t = doc.has_t ? std::optional(doc.t) : std::nullopt;
  if (doc.edge) {
    return answer_privileged(opt,
                             make_privileged_instance(doc.graph, io::edge_labeling_from_json(doc.from),
                                                      io::edge_labeling_from_json(doc.to),
                                                      *doc.privileged, t),
                             out, err);
  }
  return answer_privileged(opt,
                           make_privileged_instance(doc.graph, io::vertex_labeling_from_json(doc.from),
                                                    io::vertex_labeling_from_json(doc.to),
                                                    *doc.privileged, t),
                           out, err);
}

struct PuzzleArgs {
  std::size_t side = 0;
  std::vector<std::size_t> board1, board2;
  std::optional<std::uint64_t> k;
  bool solve = false;
};

int cmd_puzzle(const Options& opt, const PuzzleArgs& args, std::ostream& out, std::ostream& err) {
  auto inst = puzzle_instance(args.side, args.board1, args.board2, args.k.value_or(0));
  inst.t = args.k;
  if (args.solve) return answer_privileged(opt, inst, out, err);
  emit(out, io::to_json(inst, opt.offset()));
  return kOk;
}

// ---------------------------------------------------------------- reduce / gen / oracle

int cmd_reduce(const Options& opt, const std::string& direction, const std::string& path,
               std::ostream& out, std::ostream& err) {
  const auto doc = io::instance_from_json(read_json(path));
  if (direction == "v2e") {
    if (doc.edge) throw InvalidArgument("v2e needs a vertex instance");
    const auto e = vertex_to_edge(io::vertex_instance(doc));
    if (opt.verbose)
      err << "vertices " << e.graph.vertex_count() << ", edges " << e.graph.edge_count()
          << ", bound " << e.t << '\n';
    emit(out, io::to_json(e, opt.offset()));
  } else {
    if (!doc.edge) throw InvalidArgument("e2v needs an edge instance");
    const auto v = edge_to_vertex(io::edge_instance(doc));
    if (opt.verbose)
      err << "vertices " << v.graph.vertex_count() << ", edges " << v.graph.edge_count()
          << ", bound " << v.t << '\n';
    emit(out, io::to_json(v, opt.offset()));
  }
  return kOk;
}

struct GenArgs {
  std::string family;
  std::string labeling;
  std::size_t n = 0;
};

int cmd_gen(const Options& opt, const GenArgs& args, std::ostream& out) {
  if (args.family.empty() == args.labeling.empty())
    throw InvalidArgument("gen needs exactly one of --family or --labeling");
  if (!args.family.empty()) {
    const auto family = parse_family(args.family);
    if (!family) throw InvalidArgument("unknown family " + args.family);
    emit(out, io::to_json(make_family(*family, args.n, opt.seed), opt.offset()));
    return kOk;
  }
  std::vector<std::size_t> labels(args.n);
  for (std::size_t i = 0; i < args.n; ++i) labels[i] = i;
  if (args.labeling == "reverse") {
    std::reverse(labels.begin(), labels.end());
  } else if (args.labeling == "random") {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(labels.begin(), labels.end(), rng);
  } else if (args.labeling != "identity") {
    throw InvalidArgument("unknown labeling " + args.labeling);
  }
  emit(out, io::to_json(VertexLabeling(std::move(labels)), opt.offset()));
  return kOk;
}

struct OracleArgs {
  std::string graph, from, to, kind = "vertex";
  std::vector<std::size_t> privileged;
  bool diameter = false, distribution = false, component = false;
};

int cmd_oracle(const Options& opt, const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const auto g = io::graph_from_json(read_json(args.graph));
  const Mode mode = args.kind == "edge" ? Mode::edge : Mode::vertex;
  const auto label_count = mode == Mode::edge ? g.edge_count() : g.vertex_count();
  const auto rule = args.privileged.empty() ? FlipRule::unrestricted()
                                            : FlipRule::privileged(args.privileged, label_count);
  const ConfigurationSpace space(g, rule, mode, opt.capacity());

  const int queries = args.diameter + args.distribution + args.component + !args.to.empty();
  if (queries != 1)
    throw InvalidArgument("oracle needs one of --to, --diameter, --distribution, --component");

  auto source = [&] {
    if (args.from.empty()) return Permutation::identity(label_count);
    return read_labels(args.from).labels;
  };

  if (!args.to.empty()) {
    if (args.from.empty()) throw InvalidArgument("--to needs --from");
    const auto d = bfs_distance(space, source(), read_labels(args.to).labels);
    emit(out, {{"distance", d ? json(*d) : json(nullptr)}, {"reachable", d.has_value()}});
    return d ? kOk : kNo;
  }
  if (args.diameter) {
    emit(out, {{"diameter", diameter(space)}, {"states", space.state_count()}});
    return kOk;
  }
  if (args.component) {
    const auto c = component(space, source());
    emit(out, {{"component_size", c.size}, {"states", space.state_count()}});
    return kOk;
  }
  const auto histogram = distance_distribution(space, source());
  json h = json::object();
  std::uint64_t reached = 0;
  for (auto [d, count] : histogram) {
    h[std::to_string(d)] = count;
    reached += count;
  }
  if (opt.verbose) {
    err << "distance  count\n";
    for (auto [d, count] : histogram) err << std::left << std::setw(10) << d << count << '\n';
  }
  emit(out, {{"histogram", h}, {"reachable", reached}, {"states", space.state_count()}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact flip distances and flip sequences for graph relabeling", "relabel"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "Seed for random generation");
  app.add_flag("--one-based", opt.one_based, "Render vertices, edges and labels from 1");
  app.add_flag("--verbose", opt.verbose, "Print tables to standard error");
  app.add_option("--capacity-override", opt.capacity_override,
                 "State limit for exact searches (default 10! = 3628800)");

  const std::vector<std::string> methods{"auto", "path", "star", "bfs", "tree-bound"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph or a labeling");
  gen_cmd->add_option("--family", gen.family, "path|cycle|star|complete|grid|random");
  gen_cmd->add_option("--labeling", gen.labeling, "identity|reverse|random");
  gen_cmd->add_option("--n", gen.n, "Number of vertices (grid: side length)")->required();

  PairArgs dist;
  auto* dist_cmd = app.add_subcommand("distance", "Minimum number of flips between two labelings");
  dist_cmd->add_option("--graph", dist.graph)->required();
  dist_cmd->add_option("--from", dist.from)->required();
  dist_cmd->add_option("--to", dist.to)->required();
  dist_cmd->add_option("--method", dist.method)->check(CLI::IsMember(methods));
  dist_cmd->add_option("--t", dist.t, "Also decide whether exactly t flips work");

  PairArgs trans;
  auto* trans_cmd = app.add_subcommand("transform", "A flip sequence between two labelings");
  trans_cmd->add_option("--graph", trans.graph)->required();
  trans_cmd->add_option("--from", trans.from)->required();
  trans_cmd->add_option("--to", trans.to)->required();
  trans_cmd->add_option("--method", trans.method)->check(CLI::IsMember(methods));

  std::string direction, reduce_instance;
  auto* reduce_cmd = app.add_subcommand("reduce", "Map an instance between vertex and edge form");
  reduce_cmd->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"v2e", "e2v"}));
  reduce_cmd->add_option("--instance", reduce_instance)->required();

  std::string solvable_instance;
  auto* solvable_cmd = app.add_subcommand("solvable", "Decide a privileged-label instance");
  solvable_cmd->add_option("--instance", solvable_instance)->required();

  PuzzleArgs puzzle;
  auto* puzzle_cmd = app.add_subcommand("puzzle", "Sliding puzzle as a privileged instance");
  puzzle_cmd->add_option("--side", puzzle.side)->required();
  puzzle_cmd->add_option("--board1", puzzle.board1, "Cells row by row; blank is side*side-1")
      ->required()
      ->delimiter(',');
  puzzle_cmd->add_option("--board2", puzzle.board2)->required()->delimiter(',');
  puzzle_cmd->add_option("--k", puzzle.k, "Move bound");
  puzzle_cmd->add_flag("--solve", puzzle.solve, "Decide the instance instead of printing it");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Breadth-first search over all labelings");
  oracle_cmd->add_option("--graph", oracle.graph)->required();
  oracle_cmd->add_option("--from", oracle.from);
  oracle_cmd->add_option("--to", oracle.to);
  oracle_cmd->add_option("--kind", oracle.kind)->check(CLI::IsMember({"vertex", "edge"}));
  oracle_cmd->add_option("--privileged", oracle.privileged, "Privileged labels")->delimiter(',');
  oracle_cmd->add_flag("--diameter", oracle.diameter);
  oracle_cmd->add_flag("--distribution", oracle.distribution);
  oracle_cmd->add_flag("--component", oracle.component);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (opt.capacity_override) {
    err << "warning: state limit set to " << *opt.capacity_override << " (default "
        << kDefaultCapacity << "); large searches can take a long time and a lot of memory\n";
  }

  try {
    if (*gen_cmd) return cmd_gen(opt, gen, out);
    if (*dist_cmd) return cmd_distance(opt, dist, out, err);
    if (*trans_cmd) return cmd_transform(opt, trans, out, err);
    if (*reduce_cmd) return cmd_reduce(opt, direction, reduce_instance, out, err);
    if (*solvable_cmd) return cmd_solvable(opt, solvable_instance, out, err);
    if (*puzzle_cmd) return cmd_puzzle(opt, puzzle, out, err);
    return cmd_oracle(opt, oracle, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << " (raise it with --capacity-override)\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace relabel::cli
