#include "pwalk/linegraph.hpp"

#include <algorithm>

#include "pwalk/error.hpp"

namespace pwalk {

namespace {

bool arc_less(const Arc& x, const Arc& y) {
  return x.source != y.source ? x.source < y.source : x.target < y.target;
}

}  // namespace

bool AttributedDigraph::has_arc(Node source, Node target) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{source, target, 0}, arc_less);
}

std::span<const Arc> AttributedDigraph::out_arcs(Node source) const {
  auto lo = std::lower_bound(arcs.begin(), arcs.end(), source,
                             [](const Arc& a, Node n) { return a.source < n; });
  auto hi = std::upper_bound(lo, arcs.end(), source,
                             [](Node n, const Arc& a) { return n < a.source; });
  return {lo, hi};
}

std::optional<Node> AttributedDigraph::find(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Node>(it - names.begin());
}

SLineGraph s_line_graph(const AttributedHypergraph& h, std::size_t s) {
  const std::size_t m = h.num_edges();
  SLineGraph out{m, s, {}};

  // counts[j] accumulates |e_i ∩ e_j| for the current row i; only j > i is visited,
  // and `touched` lists the slots to reset.
  std::vector<std::size_t> counts(m, 0);
  std::vector<Node> touched;
  for (Node i = 0; i < m; ++i) {
    touched.clear();
    for (VertexId v : h.members(EdgeId{i})) {
      for (EdgeId e : h.memberships(v)) {
        if (e.value <= i) continue;
        if (counts[e.value]++ == 0) touched.push_back(e.value);
      }
    }
    if (s == 0) {
      for (Node j = i + 1; j < m; ++j) out.pairs.push_back({i, j, counts[j]});
    } else {
      std::sort(touched.begin(), touched.end());
      for (Node j : touched) {
        if (counts[j] >= s) out.pairs.push_back({i, j, counts[j]});
      }
    }
    for (Node j : touched) counts[j] = 0;
  }
  return out;
}

AttributedLineGraph attributed_s_line_graph(const AttributedHypergraph& h, std::size_t s,
                                            std::span<const std::string> attributes) {
  AttributedLineGraph lg;
  lg.s = s;
  lg.names.reserve(h.num_edges());
  lg.attrs.reserve(h.num_edges());
  for (std::uint32_t j = 0; j < h.num_edges(); ++j) {
    EdgeId e{j};
    AttributeMap tau;
    for (const auto& name : attributes) {
      tau.emplace(name, require(h.edge_attrs(e), name, "edge '" + h.edge_name(e) + "'"));
    }
    lg.names.push_back(h.edge_name(e));
    lg.attrs.push_back(std::move(tau));
  }

  const auto line = s_line_graph(h, s);
  lg.arcs.reserve(2 * line.pairs.size());
  for (const auto& p : line.pairs) {
    lg.arcs.push_back({p.a, p.b, p.overlap});
    lg.arcs.push_back({p.b, p.a, p.overlap});
  }
  std::sort(lg.arcs.begin(), lg.arcs.end(), arc_less);
  return lg;
}

AttributionGraph attribution_graph(std::span<const AttributeMap> tau,
                                   std::string_view attribute, const Predicate& q) {
  AttributionGraph g{tau.size(), {}};
  for (Node a = 0; a < tau.size(); ++a) {
    for (Node b = 0; b < tau.size(); ++b) {
      if (a != b && q.evaluate(tau[a], tau[b], attribute)) g.arcs.push_back({a, b, 0});
    }
  }
  return g;
}

PermissibleWalkGraph permissible_walk_graph(const AttributedLineGraph& lg,
                                            std::string_view attribute, const Predicate& q) {
  PermissibleWalkGraph p;
  p.names = lg.names;
  p.attrs = lg.attrs;
  for (const Arc& arc : lg.arcs) {
    if (q.evaluate(lg.attrs[arc.source], lg.attrs[arc.target], attribute)) p.arcs.push_back(arc);
  }
  return p;
}

PermissibleWalkGraph intersect(const PermissibleWalkGraph& a, const PermissibleWalkGraph& b) {
  if (a.names != b.names) {
    throw Error(Errc::NodeSetMismatch, "intersected graphs must share their node set");
  }
  PermissibleWalkGraph out;
  out.names = a.names;
  out.attrs = a.attrs;
  // Node attributes may differ when the operands were built from different attributes;
  // merge them so the result carries both.
  for (std::size_t i = 0; i < out.attrs.size(); ++i) {
    for (const auto& [name, value] : b.attrs[i]) out.attrs[i].emplace(name, value);
  }
  std::set_intersection(a.arcs.begin(), a.arcs.end(), b.arcs.begin(), b.arcs.end(),
                        std::back_inserter(out.arcs), arc_less);
  return out;
}

PermissibleWalkGraph s_line_as_permissible(const AttributedDigraph& g, std::size_t s) {
  PermissibleWalkGraph p;
  p.names = g.names;
  p.attrs = g.attrs;
  for (const Arc& arc : g.arcs) {
    if (arc.overlap == 0) {
      throw Error(Errc::MissingEdgeAttribute, "arc " + g.names[arc.source] + "->" +
                                                  g.names[arc.target] + " has no overlap size");
    }
    if (arc.overlap >= s) p.arcs.push_back(arc);
  }
  return p;
}

PermissibleWalkGraph as_permissible(const AttributedLineGraph& lg) {
  PermissibleWalkGraph p;
  p.names = lg.names;
  p.attrs = lg.attrs;
  p.arcs = lg.arcs;
  return p;
}

}  // namespace pwalk
