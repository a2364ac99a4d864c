#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pwalk/analysis.hpp"
#include "pwalk/attribute.hpp"
#include "pwalk/hypergraph.hpp"
#include "pwalk/linegraph.hpp"

namespace pwalk::io {

// Attribute values are encoded as single-key objects:
//   {"interval":[lo,hi]} {"set":[...]} {"bool":b} {"scalar":x}
//   {"category":"..."} {"timestamp":t} {"direction":["s","t"]}
// Hypergraphs:
//   {"vertices":[{"id","attrs"}], "edges":[{"id","members","attrs"}],
//    "incidences":[{"vertex","edge","attrs"}]}
// Derived graphs:
//   {"nodes":[{"id","attrs"}], "edges":[{"source","target","overlap"}]}

std::string attribute_to_json(const AttributeValue& value);
AttributeValue attribute_from_json(const std::string& text);

void write_hypergraph_json(std::ostream& out, const AttributedHypergraph& h);
/// Throws ParseError on malformed JSON, plus any build_hypergraph() validation error.
AttributedHypergraph read_hypergraph_json(std::istream& in);

void write_graph_json(std::ostream& out, const AttributedDigraph& g);
PermissibleWalkGraph read_graph_json(std::istream& in);

/// Graphviz digraph: node label = name, tooltip = attributes, penwidth = overlap.
void write_dot(std::ostream& out, const AttributedDigraph& g, const std::string& title = "P");

/// Header row of class labels, then one row of counts per label.
void write_interaction_csv(std::ostream& out, const InteractionMatrix& m);
/// [{"size": k, "members": [names...]}, ...]
void write_components_json(std::ostream& out, const AttributedDigraph& g,
                           std::span<const Component> components);
/// Columns t,T.
void write_trace_csv(std::ostream& out, std::span<const TracePoint> points);

}  // namespace pwalk::io
