#include "pwalk/marginalize.hpp"

#include <algorithm>
#include <iterator>

#include "pwalk/error.hpp"

namespace pwalk {

namespace {

Interval as_interval(const AttributeValue& value) {
  if (const auto* ts = std::get_if<Timestamp>(&value)) return Interval{ts->t, ts->t};
  return get_as<Interval>(value);
}

const AttributeValue& incidence_value(const AttributedHypergraph& h, VertexId v, EdgeId e,
                                      std::string_view attribute) {
  const auto& attrs = h.incidence_attrs(v, e);
  auto it = attrs.find(attribute);
  if (it == attrs.end()) {
    throw Error(Errc::MissingIncidenceAttribute,
                "attribute '" + std::string(attribute) + "' missing on incidence (" +
                    h.vertex_name(v) + ", " + h.edge_name(e) + ")");
  }
  return it->second;
}

}  // namespace

AttributeValue reduce(Marginalizer m, std::span<const AttributeValue> values) {
  if (m == Marginalizer::SetUnion) {
    std::vector<std::string> acc;
    for (const auto& v : values) {
      const auto& elems = get_as<FiniteSet>(v).elements;
      std::vector<std::string> merged;
      merged.reserve(acc.size() + elems.size());
      std::set_union(acc.begin(), acc.end(), elems.begin(), elems.end(),
                     std::back_inserter(merged));
      acc = std::move(merged);
    }
    return FiniteSet{std::move(acc)};
  }
  if (values.empty()) throw Error(Errc::EmptyCollection, "interval hull of nothing");
  Interval acc = as_interval(values.front());
  for (const auto& v : values.subspan(1)) acc = hull(acc, as_interval(v));
  return acc;
}

std::vector<AttributeValue> marginalize_edges(const AttributedHypergraph& h,
                                              std::string_view attribute, Marginalizer m) {
  std::vector<AttributeValue> out;
  out.reserve(h.num_edges());
  std::vector<AttributeValue> cells;
  for (std::uint32_t j = 0; j < h.num_edges(); ++j) {
    EdgeId e{j};
    cells.clear();
    for (VertexId v : h.members(e)) cells.push_back(incidence_value(h, v, e, attribute));
    if (cells.empty() && m == Marginalizer::IntervalHull) {
      throw Error(Errc::EmptyCollection, "edge '" + h.edge_name(e) + "' has no incidences");
    }
    out.push_back(reduce(m, cells));
  }
  return out;
}

std::vector<AttributeValue> marginalize_vertices(const AttributedHypergraph& h,
                                                 std::string_view attribute, Marginalizer m) {
  std::vector<AttributeValue> out;
  out.reserve(h.num_vertices());
  std::vector<AttributeValue> cells;
  for (std::uint32_t i = 0; i < h.num_vertices(); ++i) {
    VertexId v{i};
    cells.clear();
    for (EdgeId e : h.memberships(v)) cells.push_back(incidence_value(h, v, e, attribute));
    if (cells.empty() && m == Marginalizer::IntervalHull) {
      throw Error(Errc::EmptyCollection, "vertex '" + h.vertex_name(v) + "' has no incidences");
    }
    out.push_back(reduce(m, cells));
  }
  return out;
}

std::map<Incidence, AttributeValue> extend_to_incidences(const AttributedHypergraph& h,
                                                         AttributeSource source,
                                                         std::string_view attribute) {
  std::map<Incidence, AttributeValue> out;
  for (std::uint32_t j = 0; j < h.num_edges(); ++j) {
    EdgeId e{j};
    for (VertexId v : h.members(e)) {
      const auto& value =
          source == AttributeSource::Edge
              ? require(h.edge_attrs(e), attribute, "edge '" + h.edge_name(e) + "'")
              : require(h.vertex_attrs(v), attribute, "vertex '" + h.vertex_name(v) + "'");
      out.emplace(Incidence{v, e}, value);
    }
  }
  return out;
}

}  // namespace pwalk
