#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pwalk/hypergraph.hpp"
#include "pwalk/linegraph.hpp"

namespace pwalk {

struct TimedArc {
  std::string source;
  std::string target;
  double timestamp = 0.0;
};

/// Dynamic multi-digraph: repeated arcs are allowed and kept in input order.
struct DynamicMultiDigraph {
  std::vector<std::string> nodes;  // first-appearance order
  std::vector<TimedArc> arcs;
};

/// Collects node symbols from the arcs.
DynamicMultiDigraph make_multidigraph(std::vector<TimedArc> arcs);

/// Reads the `source,target,timestamp` CSV format.
DynamicMultiDigraph read_arcs_csv(std::istream& in);

/// 2-uniform hypergraph: one edge {source, target} per arc, named "a<k>", with
/// "direction" = DirectionPair and "time" = Timestamp. Throws SelfLoopArc.
AttributedHypergraph to_hypergraph(const DynamicMultiDigraph& d);

/// Arc e_i -> e_j iff target(e_i) == source(e_j) and t(e_i) <= t(e_j), obtained as the
/// intersection of the direction-chaining and timestamp-order permissible graphs over
/// the attributed 1-line graph.
PermissibleWalkGraph chain_permissible_graph(const DynamicMultiDigraph& d);

}  // namespace pwalk
