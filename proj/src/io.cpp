#include "pwalk/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "pwalk/error.hpp"

namespace pwalk::io {

using json = nlohmann::ordered_json;

namespace {

json encode(const AttributeValue& value) {
  struct Visitor {
    json operator()(const Interval& v) const { return {{"interval", {v.lo, v.hi}}}; }
    json operator()(const FiniteSet& v) const { return {{"set", v.elements}}; }
    json operator()(const Boolean& v) const { return {{"bool", v.value}}; }
    json operator()(const Scalar& v) const { return {{"scalar", v.value}}; }
    json operator()(const Category& v) const { return {{"category", v.label}}; }
    json operator()(const Timestamp& v) const { return {{"timestamp", v.t}}; }
    json operator()(const DirectionPair& v) const {
      return {{"direction", {v.source, v.target}}};
    }
  };
  return std::visit(Visitor{}, value);
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

AttributeValue decode(const json& j) {
  if (!j.is_object() || j.size() != 1) bad("attribute value must be a single-key object");
  const auto& [key, v] = *j.items().begin();
  try {
    if (key == "interval") {
      if (!v.is_array() || v.size() != 2) bad("interval needs [lo, hi]");
      return make_interval(v[0].get<double>(), v[1].get<double>());
    }
    if (key == "set") return make_set(v.get<std::vector<std::string>>());
    if (key == "bool") return Boolean{v.get<bool>()};
    if (key == "scalar") return Scalar{v.get<double>()};
    if (key == "category") return Category{v.get<std::string>()};
    if (key == "timestamp") return Timestamp{v.get<double>()};
    if (key == "direction") {
      if (!v.is_array() || v.size() != 2) bad("direction needs [source, target]");
      return DirectionPair{v[0].get<std::string>(), v[1].get<std::string>()};
    }
  } catch (const json::exception& e) {
    bad("attribute '" + key + "': " + e.what());
  }
  bad("unknown attribute kind '" + key + "'");
}

json encode_map(const AttributeMap& attrs) {
  json out = json::object();
  for (const auto& [name, value] : attrs) out[name] = encode(value);
  return out;
}

AttributeMap decode_map(const json& j) {
  AttributeMap out;
  if (j.is_null()) return out;
  if (!j.is_object()) bad("attrs must be an object");
  for (const auto& [name, value] : j.items()) out.emplace(name, decode(value));
  return out;
}

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

std::string id_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("id must be a string or integer");
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string attribute_to_json(const AttributeValue& value) { return encode(value).dump(); }

AttributeValue attribute_from_json(const std::string& text) {
  try {
    return decode(json::parse(text));
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

void write_hypergraph_json(std::ostream& out, const AttributedHypergraph& h) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : h.vertex_records()) {
    doc["vertices"].push_back({{"id", v.name}, {"attrs", encode_map(v.attrs)}});
  }
  doc["edges"] = json::array();
  for (const auto& e : h.edge_records()) {
    doc["edges"].push_back({{"id", e.name}, {"members", e.members}, {"attrs", encode_map(e.attrs)}});
  }
  doc["incidences"] = json::array();
  for (const auto& i : h.incidence_records()) {
    doc["incidences"].push_back(
        {{"vertex", i.vertex}, {"edge", i.edge}, {"attrs", encode_map(i.attrs)}});
  }
  out << doc.dump(2) << '\n';
}

AttributedHypergraph read_hypergraph_json(std::istream& in) {
  const json doc = parse(in);
  if (!doc.is_object()) bad("hypergraph document must be an object");
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<IncidenceRecord> incidences;
  try {
    for (const auto& v : field(doc, "vertices")) {
      vertices.push_back({id_string(field(v, "id")), decode_map(v.value("attrs", json()))});
    }
    for (const auto& e : field(doc, "edges")) {
      EdgeRecord rec{id_string(field(e, "id")), {}, decode_map(e.value("attrs", json()))};
      for (const auto& m : field(e, "members")) rec.members.push_back(id_string(m));
      edges.push_back(std::move(rec));
    }
    if (auto it = doc.find("incidences"); it != doc.end()) {
      for (const auto& i : *it) {
        incidences.push_back({id_string(field(i, "vertex")), id_string(field(i, "edge")),
                              decode_map(i.value("attrs", json()))});
      }
    }
  } catch (const json::exception& e) {
    bad(e.what());
  }
  return build_hypergraph(std::move(vertices), std::move(edges), std::move(incidences));
}

void write_graph_json(std::ostream& out, const AttributedDigraph& g) {
  json doc;
  doc["nodes"] = json::array();
  for (std::size_t n = 0; n < g.num_nodes(); ++n) {
    doc["nodes"].push_back({{"id", g.names[n]}, {"attrs", encode_map(g.attrs[n])}});
  }
  doc["edges"] = json::array();
  for (const Arc& arc : g.arcs) {
    doc["edges"].push_back(
        {{"source", g.names[arc.source]}, {"target", g.names[arc.target]}, {"overlap", arc.overlap}});
  }
  out << doc.dump(2) << '\n';
}

PermissibleWalkGraph read_graph_json(std::istream& in) {
  const json doc = parse(in);
  if (!doc.is_object()) bad("graph document must be an object");
  PermissibleWalkGraph g;
  std::unordered_map<std::string, Node> index;
  try {
    for (const auto& n : field(doc, "nodes")) {
      auto name = id_string(field(n, "id"));
      if (!index.emplace(name, static_cast<Node>(g.names.size())).second) {
        throw Error(Errc::DuplicateId, "node '" + name + "' listed twice");
      }
      g.names.push_back(std::move(name));
      g.attrs.push_back(decode_map(n.value("attrs", json())));
    }
    for (const auto& e : field(doc, "edges")) {
      auto s = index.find(id_string(field(e, "source")));
      auto t = index.find(id_string(field(e, "target")));
      if (s == index.end() || t == index.end()) bad("edge references an unknown node");
      if (s->second == t->second) bad("self-loop on node '" + s->first + "'");
      g.arcs.push_back({s->second, t->second, e.value("overlap", std::size_t{0})});
    }
  } catch (const json::exception& e) {
    bad(e.what());
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const Arc& a, const Arc& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  auto dup = std::adjacent_find(g.arcs.begin(), g.arcs.end(), [](const Arc& a, const Arc& b) {
    return a.source == b.source && a.target == b.target;
  });
  if (dup != g.arcs.end()) bad("duplicate edge " + g.names[dup->source] + "->" + g.names[dup->target]);
  return g;
}

void write_dot(std::ostream& out, const AttributedDigraph& g, const std::string& title) {
  out << "digraph \"" << escape_dot(title) << "\" {\n";
  for (std::size_t n = 0; n < g.num_nodes(); ++n) {
    std::string tooltip;
    for (const auto& [name, value] : g.attrs[n]) {
      if (!tooltip.empty()) tooltip += "; ";
      tooltip += name + "=" + to_display(value);
    }
    out << "  \"" << escape_dot(g.names[n]) << "\" [label=\"" << escape_dot(g.names[n])
        << "\", tooltip=\"" << escape_dot(tooltip) << "\"];\n";
  }
  for (const Arc& arc : g.arcs) {
    out << "  \"" << escape_dot(g.names[arc.source]) << "\" -> \""
        << escape_dot(g.names[arc.target]) << "\" [penwidth=" << std::max<std::size_t>(1, arc.overlap)
        << "];\n";
  }
  out << "}\n";
}

void write_interaction_csv(std::ostream& out, const InteractionMatrix& m) {
  for (std::size_t i = 0; i < m.labels.size(); ++i) out << (i ? "," : "") << m.labels[i];
  out << '\n';
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) out << (j ? "," : "") << m.counts(i, j);
    out << '\n';
  }
}

void write_components_json(std::ostream& out, const AttributedDigraph& g,
                           std::span<const Component> components) {
  json doc = json::array();
  for (const auto& c : components) {
    json members = json::array();
    for (Node n : c.members) members.push_back(g.names[n]);
    doc.push_back({{"size", c.size()}, {"members", std::move(members)}});
  }
  out << doc.dump(2) << '\n';
}

void write_trace_csv(std::ostream& out, std::span<const TracePoint> points) {
  out << "t,T\n";
  char buf[64];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g", p.t);
    out << buf << ',' << p.active << '\n';
  }
}

}  // namespace pwalk::io
