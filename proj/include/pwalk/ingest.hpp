#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pwalk/attribute.hpp"
#include "pwalk/hypergraph.hpp"

namespace pwalk {

struct PostRow {
  std::string user;
  std::string thread;
  std::string thread_class;
  double timestamp = 0.0;
};

using Cell = std::pair<std::size_t, std::size_t>;  // (user index, thread index)

/// Sparse user x thread post array W. Only non-empty cells are stored; timestamps keep
/// their input order.
struct PostArray {
  std::vector<std::string> users;
  std::vector<std::string> threads;
  std::vector<std::string> thread_class;  // indexed like `threads`
  std::map<Cell, std::vector<double>> cells;

  std::size_t num_posts() const;
};

/// Accumulates rows into a post array. Users and threads are numbered by first appearance.
/// Throws MalformedRow (non-finite timestamp, empty id) or InconsistentClass.
PostArray load_posts(std::span<const PostRow> rows);

/// Reads the `user_id,thread_id,class,timestamp` CSV format. Errors name the 1-based line.
PostArray read_posts_csv(std::istream& in);

/// Writes the same CSV format, cells in (user, thread) order.
void write_posts_csv(std::ostream& out, const PostArray& posts);

/// I_{i,j} = [min W[i][j], max W[i][j]] for each non-empty cell.
std::map<Cell, Interval> cell_intervals(const PostArray& posts);

/// Convex hull of each user's cell intervals, indexed like `users`.
std::vector<Interval> row_marginals(const PostArray& posts);
/// Convex hull of each thread's cell intervals, indexed like `threads`.
std::vector<Interval> column_marginals(const PostArray& posts);

/// Users become vertices, threads become edges, v in e iff the cell is non-empty.
/// Incidences carry "time" = cell interval; edges carry "time" = column hull and
/// "class" = thread label; vertices carry "time" = row hull. Throws EmptyData.
AttributedHypergraph hypergraph_from_posts(const PostArray& posts);

struct MigrationConfig {
  std::size_t users = 1000;
  std::string class_a = "A";
  std::string class_b = "B";
  double migration_time = 50.0;
  double horizon = 100.0;
  std::uint64_t seed = 1;
};

/// Seeded synthetic post log. Threads whose opening time falls before the migration time
/// are class A and only receive posts strictly before it; the rest are class B and only
/// receive posts at or after it. Each user joins a few A threads and a few B threads, so
/// author sets overlap across classes. Timestamps are whole milliseconds.
PostArray synth_migration(const MigrationConfig& config);

}  // namespace pwalk
