#include "pwalk/hypergraph.hpp"

#include <algorithm>

#include "pwalk/error.hpp"

namespace pwalk {

bool AttributedHypergraph::contains(VertexId v, EdgeId e) const {
  const auto& m = members_.at(e.index());
  return std::binary_search(m.begin(), m.end(), v);
}

std::optional<VertexId> AttributedHypergraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> AttributedHypergraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

const AttributeMap& AttributedHypergraph::incidence_attrs(VertexId v, EdgeId e) const {
  static const AttributeMap empty;
  if (!contains(v, e)) {
    throw Error(Errc::NonIncidenceAttribute,
                "(" + vertex_name(v) + ", " + edge_name(e) + ") is not an incidence");
  }
  auto it = incidence_attrs_.find({v, e});
  return it == incidence_attrs_.end() ? empty : it->second;
}

std::vector<VertexRecord> AttributedHypergraph::vertex_records() const {
  std::vector<VertexRecord> out;
  out.reserve(num_vertices());
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    out.push_back({vertex_names_[i], vertex_attrs_[i]});
  }
  return out;
}

std::vector<EdgeRecord> AttributedHypergraph::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(num_edges());
  for (std::size_t j = 0; j < num_edges(); ++j) {
    EdgeRecord rec{edge_names_[j], {}, edge_attrs_[j]};
    for (VertexId v : members_[j]) rec.members.push_back(vertex_names_[v.index()]);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<IncidenceRecord> AttributedHypergraph::incidence_records() const {
  std::vector<IncidenceRecord> out;
  out.reserve(incidence_attrs_.size());
  for (const auto& [key, attrs] : incidence_attrs_) {
    out.push_back({vertex_names_[key.first.index()], edge_names_[key.second.index()], attrs});
  }
  return out;
}

AttributedHypergraph AttributedHypergraph::with_edge_attribute(
    const std::string& name, const std::vector<AttributeValue>& values) const {
  if (values.size() != num_edges()) {
    throw Error(Errc::MissingEdgeAttribute, "attribute '" + name + "' needs one value per edge");
  }
  AttributedHypergraph out = *this;
  for (std::size_t j = 0; j < values.size(); ++j) out.edge_attrs_[j][name] = values[j];
  return out;
}

bool AttributedHypergraph::operator==(const AttributedHypergraph& other) const {
  return vertex_names_ == other.vertex_names_ && edge_names_ == other.edge_names_ &&
         members_ == other.members_ && vertex_attrs_ == other.vertex_attrs_ &&
         edge_attrs_ == other.edge_attrs_ && incidence_attrs_ == other.incidence_attrs_;
}

AttributedHypergraph build_hypergraph(std::vector<VertexRecord> vertices,
                                      std::vector<EdgeRecord> edges,
                                      std::vector<IncidenceRecord> incidences) {
  if (vertices.empty()) throw Error(Errc::EmptyVertexSet, "hypergraph needs at least one vertex");
  if (edges.empty()) throw Error(Errc::EmptyEdgeSet, "hypergraph needs at least one edge");

  AttributedHypergraph h;
  h.vertex_names_.reserve(vertices.size());
  h.vertex_attrs_.reserve(vertices.size());
  for (auto& rec : vertices) {
    VertexId id{static_cast<std::uint32_t>(h.vertex_names_.size())};
    if (!h.vertex_index_.emplace(rec.name, id).second) {
      throw Error(Errc::DuplicateId, "vertex '" + rec.name + "' declared twice");
    }
    h.vertex_names_.push_back(std::move(rec.name));
    h.vertex_attrs_.push_back(std::move(rec.attrs));
  }

  h.memberships_.resize(h.vertex_names_.size());
  h.members_.reserve(edges.size());
  for (auto& rec : edges) {
    EdgeId id{static_cast<std::uint32_t>(h.edge_names_.size())};
    if (!h.edge_index_.emplace(rec.name, id).second) {
      throw Error(Errc::DuplicateId, "edge '" + rec.name + "' declared twice");
    }
    std::vector<VertexId> members;
    members.reserve(rec.members.size());
    for (const auto& name : rec.members) {
      auto it = h.vertex_index_.find(name);
      if (it == h.vertex_index_.end()) {
        throw Error(Errc::UnknownVertexInEdge,
                    "vertex '" + name + "' in edge '" + rec.name + "' is not declared");
      }
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members) h.memberships_[v.index()].push_back(id);
    h.num_incidences_ += members.size();
    h.members_.push_back(std::move(members));
    h.edge_names_.push_back(std::move(rec.name));
    h.edge_attrs_.push_back(std::move(rec.attrs));
  }

  for (auto& rec : incidences) {
    auto vit = h.vertex_index_.find(rec.vertex);
    auto eit = h.edge_index_.find(rec.edge);
    if (vit == h.vertex_index_.end() || eit == h.edge_index_.end() ||
        !h.contains(vit->second, eit->second)) {
      throw Error(Errc::NonIncidenceAttribute,
                  "(" + rec.vertex + ", " + rec.edge + ") is not an incidence");
    }
    auto& slot = h.incidence_attrs_[{vit->second, eit->second}];
    for (auto& [name, value] : rec.attrs) {
      if (!slot.emplace(name, std::move(value)).second) {
        throw Error(Errc::DuplicateId, "incidence (" + rec.vertex + ", " + rec.edge +
                                           ") sets attribute '" + name + "' twice");
      }
    }
  }
  return h;
}

IncidenceMatrix incidence_matrix(const AttributedHypergraph& h) {
  IncidenceMatrix m = IncidenceMatrix::Constant(static_cast<Eigen::Index>(h.num_vertices()),
                                                static_cast<Eigen::Index>(h.num_edges()), false);
  for (std::uint32_t j = 0; j < h.num_edges(); ++j) {
    for (VertexId v : h.members(EdgeId{j})) m(v.value, j) = true;
  }
  return m;
}

AttributedHypergraph dual(const AttributedHypergraph& h) {
  std::vector<VertexRecord> vertices;
  vertices.reserve(h.num_edges());
  for (std::uint32_t j = 0; j < h.num_edges(); ++j) {
    vertices.push_back({h.edge_name(EdgeId{j}), h.edge_attrs(EdgeId{j})});
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(h.num_vertices());
  for (std::uint32_t i = 0; i < h.num_vertices(); ++i) {
    EdgeRecord rec{h.vertex_name(VertexId{i}), {}, h.vertex_attrs(VertexId{i})};
    for (EdgeId e : h.memberships(VertexId{i})) rec.members.push_back(h.edge_name(e));
    edges.push_back(std::move(rec));
  }
  std::vector<IncidenceRecord> incidences;
  for (const auto& [key, attrs] : h.incidence_attr_table()) {
    incidences.push_back({h.edge_name(key.second), h.vertex_name(key.first), attrs});
  }
  return build_hypergraph(std::move(vertices), std::move(edges), std::move(incidences));
}

AttributedHypergraph filter_edges_by_size(const AttributedHypergraph& h, std::size_t min_size) {
  std::vector<EdgeRecord> kept;
  for (auto& rec : h.edge_records()) {
    if (rec.members.size() >= min_size) kept.push_back(std::move(rec));
  }
  if (kept.empty()) {
    throw Error(Errc::EmptyEdgeSet,
                "no edge has at least " + std::to_string(min_size) + " members");
  }
  std::vector<IncidenceRecord> incidences;
  for (auto& rec : h.incidence_records()) {
    auto e = h.find_edge(rec.edge);
    if (h.members(*e).size() >= min_size) incidences.push_back(std::move(rec));
  }
  return build_hypergraph(h.vertex_records(), std::move(kept), std::move(incidences));
}

}  // namespace pwalk
