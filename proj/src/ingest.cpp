#include "pwalk/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>

#include "pwalk/error.hpp"

namespace pwalk {

std::size_t PostArray::num_posts() const {
  std::size_t n = 0;
  for (const auto& [cell, times] : cells) n += times.size();
  return n;
}

namespace {

constexpr std::string_view kPostsHeader = "user_id,thread_id,class,timestamp";

class PostAccumulator {
 public:
  void add(const PostRow& row, std::size_t line) {
    if (row.user.empty() || row.thread.empty() || !std::isfinite(row.timestamp)) {
      throw Error(Errc::MalformedRow, "line " + std::to_string(line));
    }
    auto [uit, unew] = user_index_.try_emplace(row.user, posts_.users.size());
    if (unew) posts_.users.push_back(row.user);
    auto [tit, tnew] = thread_index_.try_emplace(row.thread, posts_.threads.size());
    if (tnew) {
      posts_.threads.push_back(row.thread);
      posts_.thread_class.push_back(row.thread_class);
    } else if (posts_.thread_class[tit->second] != row.thread_class) {
      throw Error(Errc::InconsistentClass,
                  "thread '" + row.thread + "' labelled both '" +
                      posts_.thread_class[tit->second] + "' and '" + row.thread_class +
                      "' (line " + std::to_string(line) + ")");
    }
    posts_.cells[{uit->second, tit->second}].push_back(row.timestamp);
  }

  PostArray take() { return std::move(posts_); }

 private:
  PostArray posts_;
  std::unordered_map<std::string, std::size_t> user_index_;
  std::unordered_map<std::string, std::size_t> thread_index_;
};

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

PostArray load_posts(std::span<const PostRow> rows) {
  PostAccumulator acc;
  std::size_t line = 0;
  for (const auto& row : rows) acc.add(row, ++line);
  return acc.take();
}

PostArray read_posts_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::EmptyData, "posts CSV is empty");
  if (strip_cr(line) != kPostsHeader) {
    throw Error(Errc::MalformedRow, "line 1: expected header '" + std::string(kPostsHeader) + "'");
  }
  PostAccumulator acc;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto text = strip_cr(line);
    if (text.empty()) continue;
    auto fields = split_csv(text);
    if (fields.size() != 4) {
      throw Error(Errc::MalformedRow, "line " + std::to_string(lineno) + ": expected 4 fields");
    }
    double t = 0.0;
    auto ts = fields[3];
    auto [end, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc{} || end != ts.data() + ts.size()) {
      throw Error(Errc::MalformedRow,
                  "line " + std::to_string(lineno) + ": bad timestamp '" + std::string(ts) + "'");
    }
    acc.add({std::string(fields[0]), std::string(fields[1]), std::string(fields[2]), t}, lineno);
  }
  auto posts = acc.take();
  if (posts.cells.empty()) throw Error(Errc::EmptyData, "posts CSV has no rows");
  return posts;
}

void write_posts_csv(std::ostream& out, const PostArray& posts) {
  out << kPostsHeader << '\n';
  char buf[64];
  for (const auto& [cell, times] : posts.cells) {
    for (double t : times) {
      std::snprintf(buf, sizeof buf, "%.3f", t);
      out << posts.users[cell.first] << ',' << posts.threads[cell.second] << ','
          << posts.thread_class[cell.second] << ',' << buf << '\n';
    }
  }
}

std::map<Cell, Interval> cell_intervals(const PostArray& posts) {
  std::map<Cell, Interval> out;
  for (const auto& [cell, times] : posts.cells) {
    if (times.empty()) continue;
    auto [lo, hi] = std::minmax_element(times.begin(), times.end());
    out.emplace(cell, Interval{*lo, *hi});
  }
  return out;
}

namespace {

std::vector<Interval> marginals(const PostArray& posts, bool rows) {
  const std::size_t n = rows ? posts.users.size() : posts.threads.size();
  std::vector<std::optional<Interval>> acc(n);
  for (const auto& [cell, iv] : cell_intervals(posts)) {
    auto& slot = acc[rows ? cell.first : cell.second];
    slot = slot ? hull(*slot, iv) : iv;
  }
  std::vector<Interval> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!acc[k]) {
      throw Error(Errc::EmptyData, std::string(rows ? "user '" + posts.users[k]
                                                    : "thread '" + posts.threads[k]) +
                                       "' has no posts");
    }
    out.push_back(*acc[k]);
  }
  return out;
}

}  // namespace

std::vector<Interval> row_marginals(const PostArray& posts) { return marginals(posts, true); }

std::vector<Interval> column_marginals(const PostArray& posts) { return marginals(posts, false); }

AttributedHypergraph hypergraph_from_posts(const PostArray& posts) {
  const auto intervals = cell_intervals(posts);
  if (intervals.empty()) throw Error(Errc::EmptyData, "post array has no posts");

  // Only users and threads with at least one post take part.
  std::vector<char> user_active(posts.users.size(), 0);
  std::vector<std::vector<std::string>> thread_members(posts.threads.size());
  std::vector<std::optional<Interval>> row(posts.users.size());
  std::vector<std::optional<Interval>> col(posts.threads.size());
  std::vector<IncidenceRecord> incidences;
  incidences.reserve(intervals.size());
  for (const auto& [cell, iv] : intervals) {
    const auto& [u, t] = cell;
    user_active[u] = 1;
    thread_members[t].push_back(posts.users[u]);
    row[u] = row[u] ? hull(*row[u], iv) : iv;
    col[t] = col[t] ? hull(*col[t], iv) : iv;
    incidences.push_back({posts.users[u], posts.threads[t], {{"time", iv}}});
  }

  std::vector<VertexRecord> vertices;
  for (std::size_t u = 0; u < posts.users.size(); ++u) {
    if (user_active[u]) vertices.push_back({posts.users[u], {{"time", *row[u]}}});
  }
  std::vector<EdgeRecord> edges;
  for (std::size_t t = 0; t < posts.threads.size(); ++t) {
    if (thread_members[t].empty()) continue;
    edges.push_back({posts.threads[t],
                     std::move(thread_members[t]),
                     {{"time", *col[t]}, {"class", Category{posts.thread_class[t]}}}});
  }
  return build_hypergraph(std::move(vertices), std::move(edges), std::move(incidences));
}

namespace {

// Bounded draw in [0, n). The modulo bias is irrelevant at these sizes and, unlike
// std::uniform_int_distribution, the sequence is identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

PostArray synth_migration(const MigrationConfig& config) {
  if (config.users < 2) throw Error(Errc::EmptyData, "synthetic data needs at least two users");

  std::mt19937_64 rng(config.seed);
  const auto horizon_ms = static_cast<std::int64_t>(std::llround(config.horizon * 1000.0));
  const auto migration_ms = static_cast<std::int64_t>(std::ceil(config.migration_time * 1000.0));
  const std::size_t num_threads = std::max<std::size_t>(4, config.users / 20);
  const std::int64_t max_duration_ms = std::max<std::int64_t>(1, horizon_ms / 10);

  struct ThreadWindow {
    std::string name;
    bool class_a;
    std::int64_t open;
    std::int64_t close;  // exclusive
  };
  std::vector<ThreadWindow> windows;
  std::vector<std::size_t> a_threads;
  std::vector<std::size_t> b_threads;
  for (std::size_t j = 0; j < num_threads; ++j) {
    const auto open = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(horizon_ms)));
    const bool is_a = open < migration_ms;
    std::int64_t close = open + 1 + static_cast<std::int64_t>(draw(rng, max_duration_ms));
    close = std::min(close, is_a ? migration_ms : horizon_ms + 1);
    (is_a ? a_threads : b_threads).push_back(j);
    windows.push_back({"t" + std::to_string(j), is_a, open, close});
  }

  std::vector<PostRow> rows;
  auto post_to = [&](const std::string& user, const ThreadWindow& w) {
    const auto posts = 1 + draw(rng, 3);
    for (std::uint64_t k = 0; k < posts; ++k) {
      const auto span = static_cast<std::uint64_t>(w.close - w.open);
      const auto ms = w.open + static_cast<std::int64_t>(draw(rng, span));
      rows.push_back({user, w.name, w.class_a ? config.class_a : config.class_b,
                      static_cast<double>(ms) / 1000.0});
    }
  };
  auto join_some = [&](const std::string& user, const std::vector<std::size_t>& pool) {
    if (pool.empty()) return;
    const auto joins = 1 + draw(rng, 3);
    for (std::uint64_t k = 0; k < joins; ++k) post_to(user, windows[pool[draw(rng, pool.size())]]);
  };
  for (std::size_t i = 0; i < config.users; ++i) {
    const std::string user = "u" + std::to_string(i);
    join_some(user, a_threads);
    join_some(user, b_threads);
  }
  return load_posts(rows);
}

}  // namespace pwalk
