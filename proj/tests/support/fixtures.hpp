#pragma once

// Shared fixtures and random generators for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pwalk/hypergraph.hpp"
#include "pwalk/ingest.hpp"
#include "pwalk/multidigraph.hpp"

namespace pwalk::testing {

// Four meetings M1..M4 among six people P1..P6. Membership follows the non-empty cells
// of the topic table; times are M1=[0,1], M2=[2,3], M3=[2,3], M4=[4,5].
inline AttributedHypergraph meetings() {
  auto topics = [](std::vector<std::string> s) { return AttributeMap{{"topics", make_set(std::move(s))}}; };
  std::vector<VertexRecord> people;
  for (int i = 1; i <= 6; ++i) people.push_back({"P" + std::to_string(i), {}});
  std::vector<EdgeRecord> meetings{
      {"M1", {"P4", "P5"}, {{"time", Interval{0, 1}}}},
      {"M2", {"P5", "P6"}, {{"time", Interval{2, 3}}}},
      {"M3", {"P2", "P3", "P4"}, {{"time", Interval{2, 3}}}},
      {"M4", {"P1", "P2", "P3"}, {{"time", Interval{4, 5}}}},
  };
  std::vector<IncidenceRecord> cells{
      {"P1", "M4", topics({"C"})},
      {"P2", "M3", topics({"C", "D"})}, {"P2", "M4", topics({"C"})},
      {"P3", "M3", topics({"B", "C"})}, {"P3", "M4", topics({"C"})},
      {"P4", "M1", topics({"A", "B"})}, {"P4", "M3", topics({"D"})},
      {"P5", "M1", topics({"A", "C"})}, {"P5", "M2", topics({"E", "F"})},
      {"P6", "M2", topics({"F"})},
  };
  return build_hypergraph(std::move(people), std::move(meetings), std::move(cells));
}

// Post array with the cells of the cartoon table: user1, user2, userN over
// thread1, thread2, threadm.
inline std::vector<PostRow> sample_table_rows() {
  return {
      {"user1", "thread1", "A", 1}, {"user1", "thread1", "A", 2}, {"user1", "thread1", "A", 3},
      {"user1", "thread2", "A", 4}, {"user1", "thread2", "A", 7},
      {"user2", "thread1", "A", 8}, {"user2", "threadm", "B", 13},
      {"userN", "thread1", "A", 5}, {"userN", "thread1", "A", 10},
      {"userN", "threadm", "B", 2}, {"userN", "threadm", "B", 7},
  };
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {  // inclusive
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Interval on a coarse integer grid so shared endpoints and points occur often.
inline Interval random_interval(Rng& rng, std::size_t grid = 10) {
  auto a = static_cast<double>(uniform(rng, 0, grid));
  auto b = static_cast<double>(uniform(rng, 0, grid));
  return Interval{std::min(a, b), std::max(a, b)};
}

inline FiniteSet random_topics(Rng& rng) {
  std::vector<std::string> s;
  for (char c : std::string("ABCDEF")) {
    if (coin(rng, 0.3)) s.emplace_back(1, c);
  }
  return make_set(std::move(s));
}

// Random hypergraph with |V| <= max_v and |E| <= max_e. Edges may be empty or repeat.
// Edges carry "time" (interval) and "topics" (set); incidences carry "topics".
inline AttributedHypergraph random_hypergraph(Rng& rng, std::size_t max_v = 12,
                                              std::size_t max_e = 8) {
  const auto nv = uniform(rng, 1, max_v);
  const auto ne = uniform(rng, 1, max_e);
  const double density = 0.15 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
  std::vector<VertexRecord> vs;
  for (std::size_t i = 0; i < nv; ++i) vs.push_back({"v" + std::to_string(i), {}});
  std::vector<EdgeRecord> es;
  std::vector<IncidenceRecord> inc;
  for (std::size_t j = 0; j < ne; ++j) {
    EdgeRecord e{"e" + std::to_string(j), {}, {}};
    for (std::size_t i = 0; i < nv; ++i) {
      if (coin(rng, density)) {
        e.members.push_back(vs[i].name);
        inc.push_back({vs[i].name, e.name, {{"topics", random_topics(rng)}}});
      }
    }
    e.attrs = {{"time", random_interval(rng)}, {"topics", random_topics(rng)}};
    es.push_back(std::move(e));
  }
  return build_hypergraph(std::move(vs), std::move(es), std::move(inc));
}

inline DynamicMultiDigraph random_multidigraph(Rng& rng, std::size_t max_nodes = 8,
                                               std::size_t max_arcs = 20) {
  const auto n = uniform(rng, 2, max_nodes);
  const auto m = uniform(rng, 1, max_arcs);
  std::vector<TimedArc> arcs;
  for (std::size_t k = 0; k < m; ++k) {
    auto s = uniform(rng, 0, n - 1);
    auto t = uniform(rng, 0, n - 2);
    if (t >= s) ++t;
    arcs.push_back({"n" + std::to_string(s), "n" + std::to_string(t),
                    static_cast<double>(uniform(rng, 0, 6))});
  }
  return make_multidigraph(std::move(arcs));
}

}  // namespace pwalk::testing
