#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "pwalk/attribute.hpp"
#include "pwalk/hypergraph.hpp"

namespace pwalk {

/// Reductions of incidence attributes onto vertices or edges.
enum class Marginalizer {
  SetUnion,      ///< union of FiniteSet values
  IntervalHull,  ///< convex hull of Interval / Timestamp values; result is an Interval
};

/// Reduces a non-empty list of values. Throws KindMismatch or EmptyCollection.
AttributeValue reduce(Marginalizer m, std::span<const AttributeValue> values);

/// One reduced value per edge, indexed by EdgeId. Every incidence must carry `attribute`.
std::vector<AttributeValue> marginalize_edges(const AttributedHypergraph& h,
                                              std::string_view attribute, Marginalizer m);

/// One reduced value per vertex, indexed by VertexId.
std::vector<AttributeValue> marginalize_vertices(const AttributedHypergraph& h,
                                                 std::string_view attribute, Marginalizer m);

enum class AttributeSource { Vertex, Edge };

/// Copies a vertex or edge attribute down onto every incidence.
std::map<Incidence, AttributeValue> extend_to_incidences(const AttributedHypergraph& h,
                                                         AttributeSource source,
                                                         std::string_view attribute);

}  // namespace pwalk
