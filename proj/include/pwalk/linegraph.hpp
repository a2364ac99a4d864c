#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwalk/attribute.hpp"
#include "pwalk/hypergraph.hpp"
#include "pwalk/predicate.hpp"

namespace pwalk {

/// Node index inside a derived graph. For line graphs node i is hyperedge EdgeId{i}.
using Node = std::uint32_t;

/// Unordered s-line graph pair, a < b.
struct LinePair {
  Node a = 0;
  Node b = 0;
  std::size_t overlap = 0;  // |e_a ∩ e_b|

  bool operator==(const LinePair&) const = default;
};

struct SLineGraph {
  std::size_t num_nodes = 0;
  std::size_t s = 0;
  std::vector<LinePair> pairs;  // sorted by (a, b)
};

/// Directed arc; `overlap` is the edge attribute zeta (0 where not tracked).
struct Arc {
  Node source = 0;
  Node target = 0;
  std::size_t overlap = 0;

  bool operator==(const Arc&) const = default;
};

/// Directed graph with named, attributed nodes and arcs sorted by (source, target).
/// Self-loops never occur.
struct AttributedDigraph {
  std::vector<std::string> names;
  std::vector<AttributeMap> attrs;
  std::vector<Arc> arcs;

  std::size_t num_nodes() const noexcept { return names.size(); }
  std::size_t num_arcs() const noexcept { return arcs.size(); }
  bool has_arc(Node source, Node target) const;
  /// Arcs leaving `source`, a contiguous slice of `arcs`.
  std::span<const Arc> out_arcs(Node source) const;
  std::optional<Node> find(std::string_view name) const;
};

/// Bidirected attributed s-line graph: both (a,b) and (b,a) for every qualifying pair.
struct AttributedLineGraph : AttributedDigraph {
  std::size_t s = 0;
};

/// Directed graph of all ordered pairs a != b with q(tau(a), tau(b)) = 1.
struct AttributionGraph {
  std::size_t num_nodes = 0;
  std::vector<Arc> arcs;
};

/// Spanning subgraph of an attributed line graph selected by a predicate.
struct PermissibleWalkGraph : AttributedDigraph {};

/// s-line graph via an inverted vertex -> edges index with per-edge overlap counters.
SLineGraph s_line_graph(const AttributedHypergraph& h, std::size_t s);

/// Bidirected s-line graph with tau copied from the named edge attributes and zeta = overlap.
/// Throws MissingAttribute if an edge lacks one of `attributes`.
AttributedLineGraph attributed_s_line_graph(const AttributedHypergraph& h, std::size_t s,
                                            std::span<const std::string> attributes);

AttributionGraph attribution_graph(std::span<const AttributeMap> tau,
                                   std::string_view attribute, const Predicate& q);

PermissibleWalkGraph permissible_walk_graph(const AttributedLineGraph& lg,
                                            std::string_view attribute, const Predicate& q);

/// Edge-set intersection. Throws NodeSetMismatch unless both graphs have the same nodes.
PermissibleWalkGraph intersect(const PermissibleWalkGraph& a, const PermissibleWalkGraph& b);

/// Keeps arcs whose zeta is at least `s`. Applied to a 1-line graph this yields the
/// bidirected s-line graph for s >= 1. Throws MissingEdgeAttribute when zeta is unset.
PermissibleWalkGraph s_line_as_permissible(const AttributedDigraph& g, std::size_t s);

/// Spanning graph with every arc of `lg` (the constant-true filter).
PermissibleWalkGraph as_permissible(const AttributedLineGraph& lg);

}  // namespace pwalk
