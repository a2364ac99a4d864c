#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "commands.hpp"
#include "pwalk/io.hpp"

using namespace pwalk;
using namespace pwalk::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kData{PWALK_DATA_DIR};

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("pwalk_cli_" + std::to_string(::getpid()) + "_" +
                                       std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermissibleWalkGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  return io::read_graph_json(in);
}

// Writes the meetings permissible graph under both predicates and returns its path.
std::string meetings_graph(const Scratch& tmp, std::size_t s = 1) {
  PermissibleOptions opt;
  opt.input = (kData / "meetings.json").string();
  opt.s = s;
  opt.predicates = {"time:strong-order", "topics:set-intersects"};
  opt.marginalize = {"topics=set-union"};
  opt.out = tmp / "p";
  std::ostringstream log;
  std::ostringstream err;
  REQUIRE(run_permissible(opt, log, err) == kOk);
  return tmp / "p.json";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build from each input format") {
  Scratch tmp;
  std::ostringstream log;
  std::ostringstream err;
  BuildOptions opt;
  opt.input = (kData / "sample_posts.csv").string();
  opt.out = tmp / "h.json";
  CHECK(run_build(opt, log, err) == kOk);
  CHECK(log.str() == "vertices=3 edges=3 incidences=6\n");

  // Re-ingesting the written hypergraph gives the same structure.
  const auto first = load_input(opt.out, InputFormat::Auto);
  opt.input = opt.out;
  opt.out = tmp / "h2.json";
  CHECK(run_build(opt, log, err) == kOk);
  CHECK(load_input(opt.out, InputFormat::HypergraphJson) == first);
  CHECK(slurp(tmp / "h.json") == slurp(tmp / "h2.json"));

  const auto arcs = load_input((kData / "arcs.csv").string(), InputFormat::Auto);
  CHECK(arcs.num_edges() == 4);
}

TEST_CASE("input errors exit with 1") {
  Scratch tmp;
  std::ofstream(tmp / "empty.csv").close();
  std::ostringstream log;
  std::ostringstream err;
  BuildOptions opt;
  opt.input = tmp / "empty.csv";
  opt.out = tmp / "h.json";
  CHECK(run_build(opt, log, err) == kInputError);
  CHECK_FALSE(err.str().empty());

  opt.input = tmp / "missing.csv";
  CHECK(run_build(opt, log, err) == kInputError);
}

TEST_CASE("configuration errors exit with 2") {
  Scratch tmp;
  std::ostringstream log;
  std::ostringstream err;
  PermissibleOptions opt;
  opt.input = (kData / "meetings.json").string();
  opt.out = tmp / "p";
  opt.predicates = {"time:strongest-order"};
  CHECK(run_permissible(opt, log, err) == kConfigError);
  opt.predicates = {"time:set-intersects:t=0"};
  CHECK(run_permissible(opt, log, err) == kConfigError);
  opt.predicates = {};
  opt.marginalize = {"topics=average"};
  CHECK(run_permissible(opt, log, err) == kConfigError);

  SynthOptions synth;
  synth.classes = {"A"};
  CHECK(run_synth(synth, log, err) == kConfigError);

  AnalyzeOptions analyze;
  analyze.input = meetings_graph(tmp);
  analyze.mode = AnalyzeMode::Trace;
  analyze.samples = 0;
  CHECK(run_analyze(analyze, log, err) == kConfigError);
}

TEST_CASE("permissible pipeline on the meeting fixture") {
  Scratch tmp;
  const auto p = read_graph(meetings_graph(tmp));
  CHECK(p.names == std::vector<std::string>{"M1", "M2", "M3", "M4"});
  CHECK(p.num_arcs() == 2);
  CHECK(p.has_arc(0, 2));
  CHECK(p.has_arc(2, 3));
  CHECK(slurp(tmp / "p.dot").starts_with("digraph"));

  // A single conjunction term gives the same graph as two intersected terms.
  PermissibleOptions opt;
  opt.input = (kData / "meetings.json").string();
  opt.predicates = {"and(time:strong-order,topics:set-intersects)"};
  opt.marginalize = {"topics=set-union"};
  opt.out = tmp / "q";
  std::ostringstream log;
  std::ostringstream err;
  REQUIRE(run_permissible(opt, log, err) == kOk);
  CHECK(read_graph(tmp / "q.json").arcs == p.arcs);

  opt.drop_isolated = true;
  REQUIRE(run_permissible(opt, log, err) == kOk);
  const auto pruned = read_graph(tmp / "q.json");
  CHECK(pruned.names == std::vector<std::string>{"M1", "M3", "M4"});
  CHECK(log.str().find("removed_isolated=1") != std::string::npos);

  opt.drop_isolated = false;
  opt.min_edge_size = 3;
  REQUIRE(run_permissible(opt, log, err) == kOk);
  CHECK(read_graph(tmp / "q.json").names == std::vector<std::string>{"M3", "M4"});

  opt.min_edge_size = 0;
  opt.s = 10;
  REQUIRE(run_permissible(opt, log, err) == kOk);
  const auto edgeless = read_graph(tmp / "q.json");
  CHECK(edgeless.num_nodes() == 4);
  CHECK(edgeless.num_arcs() == 0);

  opt.s = 0;
  std::ostringstream warn;
  REQUIRE(run_permissible(opt, log, warn) == kOk);
  CHECK(warn.str().find("warning") != std::string::npos);
}

TEST_CASE("analysis modes") {
  Scratch tmp;
  const auto graph = meetings_graph(tmp);
  std::ostringstream log;
  std::ostringstream err;
  AnalyzeOptions opt;
  opt.input = graph;

  opt.mode = AnalyzeMode::Components;
  opt.out = tmp / "c.json";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  CHECK(slurp(opt.out).find("\"size\": 3") != std::string::npos);

  opt.mode = AnalyzeMode::Downstream;
  opt.node = "M1";
  opt.out = tmp / "d.json";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  auto doc = slurp(opt.out);
  CHECK(doc.find("\"reachable\": [\n    \"M3\",\n    \"M4\"\n  ]") != std::string::npos);

  opt.node = "M4";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  doc = slurp(opt.out);
  CHECK(doc.find("\"neighbors\": []") != std::string::npos);
  CHECK(doc.find("\"reachable\": []") != std::string::npos);

  opt.node = "M9";
  CHECK(run_analyze(opt, log, err) == kInputError);

  opt.mode = AnalyzeMode::Trace;
  opt.samples = 5;
  opt.out = tmp / "t.csv";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  CHECK(slurp(opt.out) == "t,T\n0,1\n1.25,0\n2.5,2\n3.75,0\n5,1\n");

  // The fixture carries no class labels.
  opt.mode = AnalyzeMode::Interaction;
  opt.out = tmp / "i.csv";
  CHECK(run_analyze(opt, log, err) != kOk);
}

TEST_CASE("synthetic data through the whole pipeline") {
  Scratch tmp;
  std::ostringstream log;
  std::ostringstream err;
  SynthOptions synth;
  synth.users = 100;
  synth.seed = 3;
  synth.out = tmp / "posts.csv";
  REQUIRE(run_synth(synth, log, err) == kOk);
  synth.out = tmp / "posts2.csv";
  REQUIRE(run_synth(synth, log, err) == kOk);
  CHECK(slurp(tmp / "posts.csv") == slurp(tmp / "posts2.csv"));

  PermissibleOptions perm;
  perm.input = tmp / "posts.csv";
  perm.predicates = {"time:strong-order"};
  perm.out = tmp / "p";
  REQUIRE(run_permissible(perm, log, err) == kOk);

  AnalyzeOptions opt;
  opt.input = tmp / "p.json";
  opt.out = tmp / "i.csv";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  std::istringstream csv(slurp(opt.out));
  std::string header;
  std::string row_a;
  std::string row_b;
  std::getline(csv, header);
  std::getline(csv, row_a);
  std::getline(csv, row_b);
  CHECK(header == "A,B");
  CHECK(row_b.starts_with("0,"));
  CHECK(row_a.substr(row_a.find(',') + 1) != "0");

  opt.s_sweep = parse_sweep("1..3");
  REQUIRE(opt.s_sweep);
  opt.out = tmp / "sweep.json";
  REQUIRE(run_analyze(opt, log, err) == kOk);
  const auto sweep = slurp(opt.out);
  CHECK(sweep.find("\"s\": 3") != std::string::npos);
  CHECK(sweep.find("\"component_sizes\"") != std::string::npos);

  opt.mode = AnalyzeMode::Trace;
  CHECK(run_analyze(opt, log, err) == kConfigError);
}

TEST_CASE("sweep parsing") {
  CHECK(parse_sweep("1..4") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(parse_sweep("2..2"));
  CHECK_FALSE(parse_sweep("4..1"));
  CHECK_FALSE(parse_sweep("1-4"));
  CHECK_FALSE(parse_sweep("a..b"));
}

}  // TEST_SUITE
