#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pwalk/attribute.hpp"

namespace pwalk {

/// Dense non-negative handle. Distinct tags keep vertex and edge handles apart.
template <class Tag>
struct Handle {
  std::uint32_t value = 0;

  auto operator<=>(const Handle&) const = default;
  std::size_t index() const noexcept { return value; }
};

using VertexId = Handle<struct VertexTag>;
using EdgeId = Handle<struct EdgeTag>;

using Incidence = std::pair<VertexId, EdgeId>;

/// Boolean incidence matrix: rows are vertices, columns are edges.
using IncidenceMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct VertexRecord {
  std::string name;
  AttributeMap attrs;
};

struct EdgeRecord {
  std::string name;
  std::vector<std::string> members;
  AttributeMap attrs;
};

struct IncidenceRecord {
  std::string vertex;
  std::string edge;
  AttributeMap attrs;
};

/// Attributed hypergraph H = (V, E, phi, epsilon, gamma).
///
/// The edge family is indexed: two edges may have identical member sets and still be
/// distinct. Member lists are kept sorted by VertexId. Incidence attributes are stored
/// only for incidences that carry at least one named attribute.
///
/// Instances are immutable once built and may be shared across threads.
class AttributedHypergraph {
 public:
  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_edges() const noexcept { return members_.size(); }
  std::size_t num_incidences() const noexcept { return num_incidences_; }

  std::span<const VertexId> members(EdgeId e) const { return members_.at(e.index()); }
  std::span<const EdgeId> memberships(VertexId v) const { return memberships_.at(v.index()); }
  bool contains(VertexId v, EdgeId e) const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.index()); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e.index()); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  const AttributeMap& vertex_attrs(VertexId v) const { return vertex_attrs_.at(v.index()); }
  const AttributeMap& edge_attrs(EdgeId e) const { return edge_attrs_.at(e.index()); }
  /// Empty map for incidences without attributes; throws for non-incidences.
  const AttributeMap& incidence_attrs(VertexId v, EdgeId e) const;
  const std::map<Incidence, AttributeMap>& incidence_attr_table() const noexcept {
    return incidence_attrs_;
  }

  /// Copy with an extra (or replaced) edge attribute; values are indexed by EdgeId.
  AttributedHypergraph with_edge_attribute(const std::string& name,
                                           const std::vector<AttributeValue>& values) const;

  /// Records in id order; build_hypergraph(to_records()) reproduces this hypergraph.
  std::vector<VertexRecord> vertex_records() const;
  std::vector<EdgeRecord> edge_records() const;
  std::vector<IncidenceRecord> incidence_records() const;

  bool operator==(const AttributedHypergraph& other) const;

 private:
  friend AttributedHypergraph build_hypergraph(std::vector<VertexRecord>,
                                               std::vector<EdgeRecord>,
                                               std::vector<IncidenceRecord>);

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<std::vector<EdgeId>> memberships_;
  std::vector<AttributeMap> vertex_attrs_;
  std::vector<AttributeMap> edge_attrs_;
  std::map<Incidence, AttributeMap> incidence_attrs_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::size_t num_incidences_ = 0;
};

/// Validates and assembles a hypergraph. Vertex ids follow the order of `vertices`,
/// edge ids the order of `edges`. Repeated members inside one edge collapse.
///
/// Errors: EmptyVertexSet, EmptyEdgeSet, DuplicateId, UnknownVertexInEdge,
/// NonIncidenceAttribute (also raised when an incidence record names an unknown object).
AttributedHypergraph build_hypergraph(std::vector<VertexRecord> vertices,
                                      std::vector<EdgeRecord> edges,
                                      std::vector<IncidenceRecord> incidences = {});

IncidenceMatrix incidence_matrix(const AttributedHypergraph& h);

/// Dual hypergraph: edges become vertices, each vertex v becomes the edge {e : v in e}.
/// Vertex and edge attributes swap; incidence attributes are transposed.
AttributedHypergraph dual(const AttributedHypergraph& h);

/// Keeps only edges with at least `min_size` members. All vertices are retained.
AttributedHypergraph filter_edges_by_size(const AttributedHypergraph& h, std::size_t min_size);

}  // namespace pwalk
