#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relabel/json_io.hpp"

namespace relabel {
namespace {

const std::string kSamples = RELABEL_SAMPLES;

std::string sample(const std::string& name) { return kSamples + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  io::json json() const { return io::parse(out); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("relabel_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, GenStar) {
  const auto r = run({"gen", "--family", "star", "--n", "4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "{\"edges\":[[0,1],[0,2],[0,3]],\"n\":4}\n");
}

TEST(Cli, GenIsReproducible) {
  const std::vector<std::string> args{"gen", "--family", "random", "--n", "12", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto a = run({"gen", "--labeling", "random", "--n", "9", "--seed", "3"});
  const auto b = run({"--seed", "3", "gen", "--labeling", "random", "--n", "9"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenNeedsExactlyOneKind) {
  EXPECT_EQ(run({"gen", "--n", "4"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "blob", "--n", "4"}).code, cli::kUsage);
}

TEST(Cli, DistanceReversedPath) {
  const auto r = run({"distance", "--graph", sample("p4.json"), "--from", sample("rev4.json"),
                      "--to", sample("id4.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "{\"distance\":6,\"exact\":true,\"method\":\"path\"}\n");
}

TEST(Cli, DistanceMethodsAgree) {
  for (const std::string m : {"path", "bfs"}) {
    const auto r = run({"distance", "--graph", sample("p4.json"), "--from", sample("rev4.json"),
                        "--to", sample("id4.json"), "--method", m});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.json().at("distance"), 6);
  }
  const auto star = run({"distance", "--graph", sample("star4.json"), "--from",
                         sample("rev4.json"), "--to", sample("id4.json")});
  EXPECT_EQ(star.json().at("method"), "star");
  EXPECT_EQ(star.json().at("distance"), 4);

  const auto bound = run({"distance", "--graph", sample("p4.json"), "--from", sample("rev4.json"),
                          "--to", sample("id4.json"), "--method", "tree-bound"});
  EXPECT_EQ(bound.json().at("exact"), false);
  EXPECT_GE(bound.json().at("distance").get<int>(), 6);
}

TEST(Cli, DistanceOnPathWithShuffledVertexNames) {
  const auto g = write_temp("path_shuffled.json", R"({"n":4,"edges":[[2,0],[0,3],[3,1]]})");
  for (const std::string m : {"path", "bfs"}) {
    const auto r = run({"distance", "--graph", g, "--from", sample("rev4.json"), "--to",
                        sample("id4.json"), "--method", m});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.json().at("distance"), 6) << m;
  }
}

TEST(Cli, DistanceExactT) {
  const std::vector<std::string> base{"distance", "--graph", sample("p4.json"), "--from",
                                      sample("rev4.json"), "--to", sample("id4.json")};
  auto with_t = [&](const std::string& t) {
    auto args = base;
    args.insert(args.end(), {"--t", t});
    return run(args);
  };
  EXPECT_EQ(with_t("8").code, cli::kOk);
  EXPECT_EQ(with_t("8").json().at("exactly_t"), true);
  EXPECT_EQ(with_t("7").code, cli::kNo);
  EXPECT_EQ(with_t("4").json().at("exactly_t"), false);
}

TEST(Cli, DistanceEdgeLabelings) {
  const auto r = run({"distance", "--graph", sample("star4.json"), "--from",
                      sample("star4_edges_from.json"), "--to", sample("star4_edges_to.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.json().at("distance"), 2);
}

TEST(Cli, TransformSelfCheckedSequence) {
  const auto r = run({"transform", "--graph", sample("p4.json"), "--from", sample("rev4.json"),
                      "--to", sample("id4.json")});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = r.json();
  EXPECT_EQ(j.at("length"), 6);
  EXPECT_EQ(j.at("optimal"), true);
  const auto seq = io::flip_sequence_from_json(j);
  EXPECT_EQ(apply_sequence(make_family(Family::path, 4), VertexLabeling{3, 2, 1, 0}, seq),
            VertexLabeling::identity(4));

  const auto one = run({"--one-based", "transform", "--graph", sample("p4.json"), "--from",
                        sample("rev4.json"), "--to", sample("id4.json")});
  EXPECT_EQ(one.json().at("flips").at(0), io::json::array({seq[0].u + 1, seq[0].v + 1}));
}

TEST(Cli, TransformEdgeKind) {
  const auto r = run({"transform", "--graph", sample("star4.json"), "--from",
                      sample("star4_edges_from.json"), "--to", sample("star4_edges_to.json"),
                      "--method", "bfs"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.json().at("kind"), "edge");
  const auto seq = io::edge_flip_sequence_from_json(r.json());
  EXPECT_EQ(apply_sequence(make_family(Family::star, 4), EdgeLabeling{2, 0, 1}, seq),
            (EdgeLabeling{0, 1, 2}));
}

TEST(Cli, MethodMismatchIsUsageError) {
  const auto r = run({"distance", "--graph", sample("star4.json"), "--from", sample("rev4.json"),
                      "--to", sample("id4.json"), "--method", "path"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, CapacityExceeded) {
  const auto big = run({"gen", "--family", "complete", "--n", "11"});
  const auto g = write_temp("k11.json", big.out);
  const auto from = write_temp("rev11.json", run({"gen", "--labeling", "reverse", "--n", "11"}).out);
  const auto to = write_temp("id11.json", run({"gen", "--labeling", "identity", "--n", "11"}).out);
  const auto r = run({"distance", "--graph", g, "--from", from, "--to", to, "--method", "bfs"});
  EXPECT_EQ(r.code, cli::kCapacity);
  // auto falls back to the constructive bound.
  const auto a = run({"distance", "--graph", g, "--from", from, "--to", to});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.json().at("method"), "tree-bound");
  EXPECT_EQ(a.json().at("exact"), false);
}

TEST(Cli, CapacityOverrideWarns) {
  const auto r = run({"--capacity-override", "10", "distance", "--graph", sample("p4.json"),
                      "--from", sample("rev4.json"), "--to", sample("id4.json"), "--method", "bfs"});
  EXPECT_EQ(r.code, cli::kCapacity);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, MissingFileAndBadJson) {
  EXPECT_EQ(run({"distance", "--graph", "/nonexistent.json", "--from", sample("rev4.json"),
                 "--to", sample("id4.json")})
                .code,
            cli::kUsage);
  const auto bad = write_temp("bad.json", "{\"n\": 4, \"edges\": [[0,1]");
  EXPECT_EQ(run({"distance", "--graph", bad, "--from", sample("rev4.json"), "--to",
                 sample("id4.json")})
                .code,
            cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
}

TEST(Cli, SolvableExampleA) {
  const auto r = run({"solvable", "--instance", sample("exampleA.json")});
  EXPECT_EQ(r.code, cli::kNo);
  const auto j = r.json();
  EXPECT_EQ(j.at("answer"), "no");
  EXPECT_EQ(j.at("method"), "invariant");
  EXPECT_TRUE(j.at("witness").is_null());
}

TEST(Cli, SolvableExampleB) {
  const auto r = run({"solvable", "--instance", sample("exampleB.json")});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.json().at("method"), "invariant");
}

TEST(Cli, SolvableWithWitness) {
  const auto r = run({"solvable", "--instance", sample("two_free_tree.json")});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = r.json();
  EXPECT_EQ(j.at("answer"), "yes");
  EXPECT_EQ(j.at("method"), "theorem");
  const Graph tree(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(3, 4)});
  const auto inst = make_privileged_instance(tree, VertexLabeling{0, 1, 2, 3, 4},
                                             VertexLabeling{0, 2, 1, 3, 4}, {0, 3, 4});
  auto cur = inst.from;
  for (const auto& f : io::flip_sequence_from_json({{"flips", j.at("witness")}})) {
    ASSERT_TRUE(is_valid_restricted_flip(inst, cur, f));
    cur = apply_flip(inst.graph, cur, f);
  }
  EXPECT_EQ(cur, inst.to);
}

TEST(Cli, SolvableNeedsPrivilegedList) {
  EXPECT_EQ(run({"solvable", "--instance", sample("vertex_p3.json")}).code, cli::kUsage);
}

TEST(Cli, SolvableWithBound) {
  const auto tight = write_temp("bounded.json", R"({"graph":{"n":3,"edges":[[0,1],[1,2]]},
      "from":[0,1,2],"to":[2,0,1],"privileged":[2],"t":1})");
  const auto r = run({"solvable", "--instance", tight});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.json().at("distance"), 2);
  EXPECT_EQ(r.json().at("method"), "oracle");
}

TEST(Cli, ReduceBothDirections) {
  const auto v2e = run({"reduce", "--direction", "v2e", "--instance", sample("vertex_p3.json")});
  ASSERT_EQ(v2e.code, cli::kOk);
  const auto e = io::edge_instance(io::instance_from_json(v2e.json()));
  EXPECT_EQ(e.graph.vertex_count(), 6u);
  EXPECT_EQ(e.t, 9u);

  const auto e2v = run({"reduce", "--direction", "e2v", "--instance", sample("edge_star4.json")});
  ASSERT_EQ(e2v.code, cli::kOk);
  const auto v = io::vertex_instance(io::instance_from_json(e2v.json()));
  EXPECT_EQ(v.graph, make_family(Family::complete, 3));
  EXPECT_EQ(v.t, 2u);

  EXPECT_EQ(run({"reduce", "--direction", "e2v", "--instance", sample("vertex_p3.json")}).code,
            cli::kUsage);
  EXPECT_EQ(run({"reduce", "--direction", "sideways", "--instance", sample("vertex_p3.json")}).code,
            cli::kUsage);
}

TEST(Cli, Puzzle) {
  const auto inst = run({"puzzle", "--side", "2", "--board1", "0,1,2,3", "--board2", "1,0,2,3"});
  ASSERT_EQ(inst.code, cli::kOk);
  EXPECT_EQ(inst.json().at("privileged"), io::json::array({3}));

  const auto no = run({"puzzle", "--side", "2", "--board1", "0,1,2,3", "--board2", "1,0,2,3",
                       "--solve"});
  EXPECT_EQ(no.code, cli::kNo);

  const auto yes = run({"puzzle", "--side", "3", "--board1", "0,1,2,3,4,5,6,7,8", "--board2",
                        "0,1,2,3,4,5,6,8,7", "--k", "1", "--solve"});
  EXPECT_EQ(yes.code, cli::kOk);
  EXPECT_EQ(yes.json().at("witness"), io::json::parse("[[7,8]]"));
}

TEST(Cli, OracleQueries) {
  const auto d = run({"oracle", "--graph", sample("p4.json"), "--from", sample("rev4.json"),
                      "--to", sample("id4.json")});
  EXPECT_EQ(d.code, cli::kOk);
  EXPECT_EQ(d.json().at("distance"), 6);

  const auto diam = run({"oracle", "--graph", sample("star4.json"), "--diameter"});
  EXPECT_EQ(diam.json().at("diameter"), 4);

  const auto hist = run({"oracle", "--graph", sample("star4.json"), "--distribution"});
  EXPECT_EQ(hist.json().at("reachable"), 24);
  EXPECT_EQ(hist.json().at("histogram").at("0"), 1);

  const auto grid = write_temp("grid2.json", run({"gen", "--family", "grid", "--n", "2"}).out);
  const auto comp = run({"oracle", "--graph", grid, "--privileged", "3", "--component"});
  EXPECT_EQ(comp.json().at("component_size"), 12);

  const auto blocked = run({"oracle", "--graph", sample("p4.json"), "--privileged", "0",
                            "--from", sample("rev4.json"), "--to", sample("id4.json")});
  EXPECT_EQ(blocked.code, cli::kNo);
  EXPECT_EQ(blocked.json().at("reachable"), false);

  EXPECT_EQ(run({"oracle", "--graph", sample("p4.json")}).code, cli::kUsage);
}

TEST(Cli, VerboseWritesTablesToStderrOnly) {
  const auto quiet = run({"oracle", "--graph", sample("star4.json"), "--distribution"});
  const auto loud = run({"--verbose", "oracle", "--graph", sample("star4.json"), "--distribution"});
  EXPECT_EQ(quiet.out, loud.out);
  EXPECT_TRUE(quiet.err.empty());
  EXPECT_NE(loud.err.find("distance"), std::string::npos);
}

}  // namespace
}  // namespace relabel
