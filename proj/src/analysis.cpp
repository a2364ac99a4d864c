#include "pwalk/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "pwalk/error.hpp"

namespace pwalk {

std::optional<Eigen::Index> InteractionMatrix::index_of(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Eigen::Index>(it - labels.begin());
}

std::int64_t InteractionMatrix::at(std::string_view from, std::string_view to) const {
  auto i = index_of(from);
  auto j = index_of(to);
  if (!i || !j) return 0;
  return counts(*i, *j);
}

ClassFunction class_from_attribute(const AttributedDigraph& g, std::string attribute) {
  return [&g, attribute = std::move(attribute)](Node n) -> std::optional<std::string> {
    auto it = g.attrs.at(n).find(attribute);
    if (it == g.attrs.at(n).end()) return std::nullopt;
    return get_as<Category>(it->second).label;
  };
}

InteractionMatrix interaction_matrix(const AttributedDigraph& g, const ClassFunction& class_of,
                                     std::vector<std::string> labels) {
  std::vector<std::string> node_class(g.num_nodes());
  for (Node n = 0; n < g.num_nodes(); ++n) {
    auto label = class_of(n);
    if (!label) throw Error(Errc::UnlabeledNode, "node '" + g.names[n] + "' has no class");
    node_class[n] = std::move(*label);
  }
  if (labels.empty()) {
    std::set<std::string> seen(node_class.begin(), node_class.end());
    labels.assign(seen.begin(), seen.end());
  }

  InteractionMatrix m{std::move(labels), {}};
  const auto r = static_cast<Eigen::Index>(m.labels.size());
  m.counts = CountMatrix::Zero(r, r);
  std::vector<Eigen::Index> node_index(g.num_nodes());
  for (Node n = 0; n < g.num_nodes(); ++n) {
    auto idx = m.index_of(node_class[n]);
    if (!idx) {
      throw Error(Errc::UnlabeledNode,
                  "class '" + node_class[n] + "' of node '" + g.names[n] + "' not in label list");
    }
    node_index[n] = *idx;
  }
  for (const Arc& arc : g.arcs) ++m.counts(node_index[arc.source], node_index[arc.target]);
  return m;
}

CountMatrix ClassGraph::adjacency() const {
  const auto r = static_cast<Eigen::Index>(labels.size());
  CountMatrix a = CountMatrix::Zero(r, r);
  for (const auto& arc : arcs) a(arc.source, arc.target) = arc.weight;
  return a;
}

ClassGraph class_graph(const InteractionMatrix& m) {
  ClassGraph g{m.labels, {}};
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) {
      if (m.counts(i, j) != 0) g.arcs.push_back({i, j, m.counts(i, j)});
    }
  }
  return g;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Node{0});
  }

  Node find(Node x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Node a, Node b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Node> parent_;
};

void check_node(const AttributedDigraph& g, Node node) {
  if (node >= g.num_nodes()) {
    throw Error(Errc::UnknownNode, "node index " + std::to_string(node) + " out of range");
  }
}

}  // namespace

std::vector<Component> weakly_connected_components(const AttributedDigraph& g) {
  DisjointSets sets(g.num_nodes());
  for (const Arc& arc : g.arcs) sets.unite(arc.source, arc.target);

  std::vector<Component> out;
  std::vector<std::size_t> slot(g.num_nodes(), SIZE_MAX);
  for (Node n = 0; n < g.num_nodes(); ++n) {
    Node root = sets.find(n);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].members.push_back(n);
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.size() > b.size();
  });
  return out;
}

std::vector<Node> downstream_neighbors(const AttributedDigraph& g, Node node) {
  check_node(g, node);
  std::vector<Node> out;
  for (const Arc& arc : g.out_arcs(node)) out.push_back(arc.target);
  return out;
}

std::vector<Node> downstream_reachable(const AttributedDigraph& g, Node node) {
  check_node(g, node);
  std::vector<char> seen(g.num_nodes(), 0);
  std::deque<Node> queue;
  for (const Arc& arc : g.out_arcs(node)) {
    if (!seen[arc.target]) {
      seen[arc.target] = 1;
      queue.push_back(arc.target);
    }
  }
  while (!queue.empty()) {
    Node u = queue.front();
    queue.pop_front();
    for (const Arc& arc : g.out_arcs(u)) {
      if (!seen[arc.target]) {
        seen[arc.target] = 1;
        queue.push_back(arc.target);
      }
    }
  }
  std::vector<Node> out;
  for (Node n = 0; n < g.num_nodes(); ++n) {
    if (seen[n]) out.push_back(n);
  }
  return out;
}

IsolatedRemoval remove_isolated(const AttributedDigraph& g) {
  std::vector<char> touched(g.num_nodes(), 0);
  for (const Arc& arc : g.arcs) touched[arc.source] = touched[arc.target] = 1;

  IsolatedRemoval out;
  std::vector<Node> renumber(g.num_nodes(), 0);
  for (Node n = 0; n < g.num_nodes(); ++n) {
    if (!touched[n]) {
      ++out.removed;
      continue;
    }
    renumber[n] = static_cast<Node>(out.graph.names.size());
    out.graph.names.push_back(g.names[n]);
    out.graph.attrs.push_back(g.attrs[n]);
  }
  out.graph.arcs.reserve(g.arcs.size());
  for (const Arc& arc : g.arcs) {
    out.graph.arcs.push_back({renumber[arc.source], renumber[arc.target], arc.overlap});
  }
  return out;
}

Interval support(std::span<const Interval> intervals) {
  if (intervals.empty()) throw Error(Errc::EmptyCollection, "trace of an empty collection");
  Interval u = intervals.front();
  for (const auto& iv : intervals.subspan(1)) u = hull(u, iv);
  return u;
}

std::vector<double> evenly_spaced(const Interval& range, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(range.lo);
    return out;
  }
  const double width = range.hi - range.lo;
  for (std::size_t k = 0; k < count; ++k) {
    // Last point pinned to hi so rounding never leaves the support.
    out.push_back(k + 1 == count ? range.hi
                                 : range.lo + width * static_cast<double>(k) /
                                                  static_cast<double>(count - 1));
  }
  return out;
}

std::vector<TracePoint> trace(std::span<const Interval> intervals,
                              std::span<const double> samples) {
  const Interval u = support(intervals);
  std::vector<double> starts;
  std::vector<double> ends;
  starts.reserve(intervals.size());
  ends.reserve(intervals.size());
  for (const auto& iv : intervals) {
    starts.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::sort(starts.begin(), starts.end());
  std::sort(ends.begin(), ends.end());

  std::vector<TracePoint> out;
  out.reserve(samples.size());
  for (double t : samples) {
    if (!u.contains(t)) {
      throw Error(Errc::SampleOutsideSupport, "sample " + std::to_string(t) +
                                                  " outside support [" + std::to_string(u.lo) +
                                                  "," + std::to_string(u.hi) + "]");
    }
    // Active = started at or before t, minus those that ended strictly before t.
    auto started = std::upper_bound(starts.begin(), starts.end(), t) - starts.begin();
    auto ended = std::lower_bound(ends.begin(), ends.end(), t) - ends.begin();
    out.push_back({t, static_cast<std::size_t>(started - ended)});
  }
  return out;
}

std::vector<TracePoint> trace(std::span<const Interval> intervals, std::size_t count) {
  auto samples = evenly_spaced(support(intervals), count);
  return trace(intervals, samples);
}

}  // namespace pwalk
