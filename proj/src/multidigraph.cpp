#include "pwalk/multidigraph.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <unordered_set>

#include "pwalk/error.hpp"

namespace pwalk {

DynamicMultiDigraph make_multidigraph(std::vector<TimedArc> arcs) {
  DynamicMultiDigraph d;
  std::unordered_set<std::string> seen;
  for (const auto& arc : arcs) {
    if (!std::isfinite(arc.timestamp)) {
      throw Error(Errc::MalformedRow, "arc " + arc.source + "->" + arc.target +
                                          " has a non-finite timestamp");
    }
    for (const auto* name : {&arc.source, &arc.target}) {
      if (seen.insert(*name).second) d.nodes.push_back(*name);
    }
  }
  d.arcs = std::move(arcs);
  return d;
}

DynamicMultiDigraph read_arcs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::EmptyData, "arcs CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "source,target,timestamp") {
    throw Error(Errc::MalformedRow, "line 1: expected header 'source,target,timestamp'");
  }
  std::vector<TimedArc> arcs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto c1 = line.find(',');
    auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos || c1 == 0 ||
        c2 == c1 + 1) {
      throw Error(Errc::MalformedRow, "line " + std::to_string(lineno) + ": expected 3 fields");
    }
    double t = 0.0;
    const char* first = line.data() + c2 + 1;
    const char* last = line.data() + line.size();
    auto [end, ec] = std::from_chars(first, last, t);
    if (ec != std::errc{} || end != last) {
      throw Error(Errc::MalformedRow, "line " + std::to_string(lineno) + ": bad timestamp");
    }
    arcs.push_back({line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1), t});
  }
  if (arcs.empty()) throw Error(Errc::EmptyData, "arcs CSV has no rows");
  return make_multidigraph(std::move(arcs));
}

AttributedHypergraph to_hypergraph(const DynamicMultiDigraph& d) {
  std::vector<VertexRecord> vertices;
  vertices.reserve(d.nodes.size());
  for (const auto& n : d.nodes) vertices.push_back({n, {}});
  std::vector<EdgeRecord> edges;
  edges.reserve(d.arcs.size());
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    const auto& arc = d.arcs[k];
    if (arc.source == arc.target) {
      throw Error(Errc::SelfLoopArc, "arc " + std::to_string(k) + " (" + arc.source + "->" +
                                         arc.target + ") is a self-loop");
    }
    edges.push_back({"a" + std::to_string(k),
                     {arc.source, arc.target},
                     {{"direction", DirectionPair{arc.source, arc.target}},
                      {"time", Timestamp{arc.timestamp}}}});
  }
  return build_hypergraph(std::move(vertices), std::move(edges));
}

PermissibleWalkGraph chain_permissible_graph(const DynamicMultiDigraph& d) {
  const auto h = to_hypergraph(d);
  const std::vector<std::string> attrs{"direction", "time"};
  const auto lg = attributed_s_line_graph(h, 1, attrs);
  return intersect(permissible_walk_graph(lg, "direction", Predicate::direction_chains()),
                   permissible_walk_graph(lg, "time", Predicate::timestamp_leq()));
}

}  // namespace pwalk
