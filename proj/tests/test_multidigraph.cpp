#include <doctest.h>

#include <sstream>

#include "pwalk/error.hpp"
#include "pwalk/multidigraph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pwalk;
using namespace pwalk::testing;

TEST_SUITE("multidigraph") {

TEST_CASE("2-uniform reduction") {
  const auto d = make_multidigraph({{"a", "b", 1}, {"b", "c", 2}});
  const auto h = to_hypergraph(d);
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 2);
  CHECK(h.edge_attrs(EdgeId{0}).at("direction") == AttributeValue{DirectionPair{"a", "b"}});
  CHECK(h.edge_attrs(EdgeId{1}).at("time") == AttributeValue{Timestamp{2}});
  for (std::uint32_t j = 0; j < 2; ++j) CHECK(h.members(EdgeId{j}).size() == 2);

  const auto dup = to_hypergraph(make_multidigraph({{"a", "b", 1}, {"a", "b", 5}}));
  CHECK(dup.num_edges() == 2);
  CHECK(std::ranges::equal(dup.members(EdgeId{0}), dup.members(EdgeId{1})));

  try {
    to_hypergraph(make_multidigraph({{"a", "a", 1}}));
    FAIL("expected SelfLoopArc");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SelfLoopArc);
  }
}

TEST_CASE("chain permissible graph examples") {
  CHECK(arc_set(chain_permissible_graph(make_multidigraph({{"a", "b", 1}, {"b", "c", 2}}))) ==
        ArcSet{{0, 1}});
  CHECK(chain_permissible_graph(make_multidigraph({{"a", "b", 3}, {"b", "c", 2}})).arcs.empty());
  CHECK(arc_set(chain_permissible_graph(make_multidigraph({{"a", "b", 1}, {"b", "a", 1}}))) ==
        ArcSet{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(chain_permissible_graph(make_multidigraph({{"a", "a", 1}})), Error);
}

TEST_CASE("chain graph equals the double-loop oracle") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = random_multidigraph(rng);
    const auto p = chain_permissible_graph(d);
    CHECK(arc_set(p) == chain_oracle(d));

    // Q ⊆ K: every chained pair shares an endpoint in the 1-line graph.
    const std::vector<std::string> none;
    const auto line = arc_set(attributed_s_line_graph(to_hypergraph(d), 1, none));
    for (const auto& arc : arc_set(p)) CHECK(line.contains(arc));
  }
}

TEST_CASE("arcs csv") {
  std::istringstream in("source,target,timestamp\na,b,1\nb,c,2.5\n");
  const auto d = read_arcs_csv(in);
  CHECK(d.nodes == std::vector<std::string>{"a", "b", "c"});
  CHECK(d.arcs.size() == 2);
  CHECK(d.arcs[1].timestamp == 2.5);

  std::istringstream bad("source,target,timestamp\na,b\n");
  CHECK_THROWS_AS(read_arcs_csv(bad), Error);
  std::istringstream bad_time("source,target,timestamp\na,b,x\n");
  CHECK_THROWS_AS(read_arcs_csv(bad_time), Error);
  std::istringstream header("from,to,t\n");
  CHECK_THROWS_AS(read_arcs_csv(header), Error);
}

}  // TEST_SUITE
