#include <doctest.h>

#include <sstream>

#include "pwalk/error.hpp"
#include "pwalk/io.hpp"
#include "pwalk/ingest.hpp"
#include "pwalk/linegraph.hpp"
#include "pwalk/marginalize.hpp"
#include "support/fixtures.hpp"

using namespace pwalk;
using namespace pwalk::testing;

namespace {

AttributedHypergraph round_trip(const AttributedHypergraph& h) {
  std::stringstream buf;
  io::write_hypergraph_json(buf, h);
  return io::read_hypergraph_json(buf);
}

void check_same_graph(const AttributedDigraph& a, const AttributedDigraph& b) {
  CHECK(a.names == b.names);
  CHECK(a.attrs == b.attrs);
  CHECK(a.arcs == b.arcs);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("attribute encodings round trip") {
  const std::vector<AttributeValue> values{
      Interval{0.5, 2}, make_set({"b", "a"}), Boolean{true}, Scalar{-3.25},
      Category{"A"}, Timestamp{1e9 + 0.001}, DirectionPair{"x", "y"}, FiniteSet{}};
  for (const auto& v : values) CHECK(io::attribute_from_json(io::attribute_to_json(v)) == v);
  CHECK(io::attribute_to_json(Interval{0, 1}) == R"({"interval":[0.0,1.0]})");
  CHECK_THROWS_AS(io::attribute_from_json(R"({"colour":1})"), Error);
  CHECK_THROWS_AS(io::attribute_from_json(R"({"interval":[2,1]})"), Error);
  CHECK_THROWS_AS(io::attribute_from_json("not json"), Error);
}

TEST_CASE("hypergraph json round trip") {
  CHECK(round_trip(meetings()) == meetings());
  const auto posts = hypergraph_from_posts(load_posts(sample_table_rows()));
  CHECK(round_trip(posts) == posts);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_hypergraph(rng);
    CHECK(round_trip(h) == h);
    CHECK(round_trip(dual(h)) == dual(h));
  }
}

TEST_CASE("hypergraph json errors") {
  std::istringstream garbage("{");
  try {
    io::read_hypergraph_json(garbage);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  std::istringstream unknown(
      R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","members":["a","z"]}]})");
  try {
    io::read_hypergraph_json(unknown);
    FAIL("expected UnknownVertexInEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVertexInEdge);
  }
}

TEST_CASE("graph json round trip") {
  const auto h = meetings().with_edge_attribute(
      "topics", marginalize_edges(meetings(), "topics", Marginalizer::SetUnion));
  const std::vector<std::string> attrs{"time", "topics"};
  const auto p = permissible_walk_graph(attributed_s_line_graph(h, 1, attrs), "time",
                                        Predicate::strong_order());
  std::stringstream buf;
  io::write_graph_json(buf, p);
  check_same_graph(io::read_graph_json(buf), p);

  std::istringstream dangling(R"({"nodes":[{"id":"a"}],"edges":[{"source":"a","target":"b"}]})");
  CHECK_THROWS_AS(io::read_graph_json(dangling), Error);
}

TEST_CASE("dot output") {
  PermissibleWalkGraph g;
  g.names = {"M1", "M\"2"};
  g.attrs = {{{"time", Interval{0, 1}}}, {}};
  g.arcs = {{0, 1, 3}};
  std::ostringstream out;
  io::write_dot(out, g);
  const auto dot = out.str();
  CHECK(dot.starts_with("digraph"));
  CHECK(dot.find("penwidth=3") != std::string::npos);
  CHECK(dot.find("M\\\"2") != std::string::npos);
  CHECK(dot.find("time=") != std::string::npos);
}

TEST_CASE("tabular writers") {
  InteractionMatrix m;
  m.labels = {"A", "B"};
  m.counts = CountMatrix::Zero(2, 2);
  m.counts(0, 1) = 4;
  std::ostringstream csv;
  io::write_interaction_csv(csv, m);
  CHECK(csv.str() == "A,B\n0,4\n0,0\n");

  const std::vector<TracePoint> pts{{0, 1}, {0.5, 2}};
  std::ostringstream trace_csv;
  io::write_trace_csv(trace_csv, pts);
  CHECK(trace_csv.str() == "t,T\n0,1\n0.5,2\n");
}

}  // TEST_SUITE
