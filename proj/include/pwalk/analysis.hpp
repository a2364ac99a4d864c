#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pwalk/attribute.hpp"
#include "pwalk/linegraph.hpp"

namespace pwalk {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// counts(i, j) = number of arcs from a class-i node to a class-j node.
struct InteractionMatrix {
  std::vector<std::string> labels;
  CountMatrix counts;

  std::optional<Eigen::Index> index_of(std::string_view label) const;
  std::int64_t at(std::string_view from, std::string_view to) const;
};

/// Returns the class label of a node, or nullopt for unlabeled nodes.
using ClassFunction = std::function<std::optional<std::string>(Node)>;

/// Reads a Category attribute as the class label.
ClassFunction class_from_attribute(const AttributedDigraph& g, std::string attribute);

/// Labels are ordered as given; pass an empty list to use the sorted set of observed labels.
/// Throws UnlabeledNode if class_of returns nullopt for any node, or a label outside `labels`.
InteractionMatrix interaction_matrix(const AttributedDigraph& g, const ClassFunction& class_of,
                                     std::vector<std::string> labels = {});

struct ClassArc {
  Eigen::Index source = 0;
  Eigen::Index target = 0;
  std::int64_t weight = 0;

  bool operator==(const ClassArc&) const = default;
};

/// Weighted digraph on class labels whose adjacency matrix is the interaction matrix.
struct ClassGraph {
  std::vector<std::string> labels;
  std::vector<ClassArc> arcs;  // non-zero entries only, self-loops included

  CountMatrix adjacency() const;
};

ClassGraph class_graph(const InteractionMatrix& m);

struct Component {
  std::vector<Node> members;  // ascending
  std::size_t size() const noexcept { return members.size(); }
};

/// Components ignoring arc direction, largest first (ties by smallest member).
std::vector<Component> weakly_connected_components(const AttributedDigraph& g);

std::vector<Node> downstream_neighbors(const AttributedDigraph& g, Node node);

/// Nodes reachable by a directed path of length >= 1. The start node is included only
/// when a cycle returns to it.
std::vector<Node> downstream_reachable(const AttributedDigraph& g, Node node);

struct IsolatedRemoval {
  PermissibleWalkGraph graph;
  std::size_t removed = 0;
};

/// Drops nodes with no incident arcs. Surviving nodes are renumbered in order.
IsolatedRemoval remove_isolated(const AttributedDigraph& g);

struct TracePoint {
  double t = 0.0;
  std::size_t active = 0;
};

/// Convex hull of a non-empty interval collection. Throws EmptyCollection.
Interval support(std::span<const Interval> intervals);

/// `count` evenly spaced points spanning `range` (endpoints included).
std::vector<double> evenly_spaced(const Interval& range, std::size_t count);

/// T(t) = number of closed intervals containing t, at each sample.
/// Throws EmptyCollection, or SampleOutsideSupport for samples outside the hull.
std::vector<TracePoint> trace(std::span<const Interval> intervals, std::span<const double> samples);

inline constexpr std::size_t kDefaultTraceSamples = 2000;

/// Trace at `count` evenly spaced samples over the support.
std::vector<TracePoint> trace(std::span<const Interval> intervals,
                              std::size_t count = kDefaultTraceSamples);

}  // namespace pwalk
