#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pwalk/analysis.hpp"
#include "pwalk/error.hpp"
#include "pwalk/ingest.hpp"
#include "pwalk/io.hpp"
#include "pwalk/linegraph.hpp"
#include "pwalk/marginalize.hpp"
#include "pwalk/multidigraph.hpp"
#include "pwalk/predicate.hpp"

namespace pwalk::cli {

namespace {

// Raised for bad flag values that CLI11 cannot validate on its own.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return in;
}

// Runs `body` with a stream bound to `path` ("-" is standard output).
template <class Body>
void with_output(const std::string& path, Body&& body) {
  if (path == "-" || path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  body(out);
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvalidPredicate ? kConfigError : kInputError;
  }
}

InputFormat sniff(const std::string& path) {
  auto in = open_in(path);
  std::string first;
  char c = 0;
  while (in.get(c) && (c == ' ' || c == '\n' || c == '\r' || c == '\t')) {
  }
  if (!in) throw Error(Errc::EmptyData, "'" + path + "' is empty");
  if (c == '{') return InputFormat::HypergraphJson;
  in.unget();
  std::getline(in, first);
  if (!first.empty() && first.back() == '\r') first.pop_back();
  if (first == "user_id,thread_id,class,timestamp") return InputFormat::PostsCsv;
  if (first == "source,target,timestamp") return InputFormat::ArcsCsv;
  throw Error(Errc::ParseError, "cannot tell the format of '" + path + "'; pass --format");
}

std::vector<std::string> common_edge_attributes(const AttributedHypergraph& h) {
  std::vector<std::string> out;
  for (const auto& [name, value] : h.edge_attrs(EdgeId{0})) {
    bool everywhere = true;
    for (std::uint32_t j = 1; j < h.num_edges() && everywhere; ++j) {
      everywhere = h.edge_attrs(EdgeId{j}).contains(name);
    }
    if (everywhere) out.push_back(name);
  }
  return out;
}

Marginalizer parse_marginalizer(const std::string& name) {
  if (name == "set-union") return Marginalizer::SetUnion;
  if (name == "interval-hull") return Marginalizer::IntervalHull;
  throw ConfigError("unknown marginalizer '" + name + "' (set-union | interval-hull)");
}

std::vector<std::string> node_names(const AttributedDigraph& g, const std::vector<Node>& nodes) {
  std::vector<std::string> out;
  for (Node n : nodes) out.push_back(g.names[n]);
  return out;
}

}  // namespace

AttributedHypergraph load_input(const std::string& path, InputFormat format) {
  if (format == InputFormat::Auto) format = sniff(path);
  auto in = open_in(path);
  switch (format) {
    case InputFormat::PostsCsv: return hypergraph_from_posts(read_posts_csv(in));
    case InputFormat::ArcsCsv: return to_hypergraph(read_arcs_csv(in));
    case InputFormat::HypergraphJson:
    case InputFormat::Auto: break;
  }
  return io::read_hypergraph_json(in);
}

std::optional<std::pair<std::size_t, std::size_t>> parse_sweep(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    if (lo_text.empty() || hi_text.empty() || lo_text[0] == '-' || hi_text[0] == '-') {
      return std::nullopt;
    }
    auto lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) return std::nullopt;
    auto hi = std::stoul(hi_text, &used);
    if (used != hi_text.size() || lo > hi) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_build(const BuildOptions& opt, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    auto h = load_input(opt.input, opt.format);
    if (opt.min_edge_size > 0) h = filter_edges_by_size(h, opt.min_edge_size);
    with_output(opt.out, [&](std::ostream& out) { io::write_hypergraph_json(out, h); });
    log << "vertices=" << h.num_vertices() << " edges=" << h.num_edges()
        << " incidences=" << h.num_incidences() << '\n';
    return kOk;
  });
}

int run_permissible(const PermissibleOptions& opt, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<PredicateTerm> terms;
    for (const auto& text : opt.predicates) terms.push_back(parse_predicate_term(text));
    std::vector<std::pair<std::string, Marginalizer>> reductions;
    for (const auto& text : opt.marginalize) {
      auto eq = text.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--marginalize expects attr=set-union|interval-hull, got '" + text + "'");
      }
      reductions.emplace_back(text.substr(0, eq), parse_marginalizer(text.substr(eq + 1)));
    }
    if (opt.out.empty()) throw ConfigError("--out is required");
    if (opt.s == 0) {
      err << "warning: s=0 yields the complete line graph (quadratic in the edge count)\n";
    }

    auto h = load_input(opt.input, opt.format);
    if (opt.min_edge_size > 0) h = filter_edges_by_size(h, opt.min_edge_size);
    for (const auto& [name, m] : reductions) {
      h = h.with_edge_attribute(name, marginalize_edges(h, name, m));
    }

    std::vector<std::string> attrs = common_edge_attributes(h);
    auto want = [&](const std::string& name) {
      if (std::find(attrs.begin(), attrs.end(), name) == attrs.end()) attrs.push_back(name);
    };
    for (const auto& name : opt.attributes) want(name);
    for (const auto& term : terms) {
      for (const auto& name : term.predicate.attributes(term.attribute)) want(name);
    }

    const auto lg = attributed_s_line_graph(h, opt.s, attrs);
    auto p = as_permissible(lg);
    for (const auto& term : terms) {
      p = intersect(p, permissible_walk_graph(lg, term.attribute, term.predicate));
    }
    std::size_t removed = 0;
    if (opt.drop_isolated) {
      auto pruned = remove_isolated(p);
      removed = pruned.removed;
      p = std::move(pruned.graph);
    }

    with_output(opt.out + ".json", [&](std::ostream& out) { io::write_graph_json(out, p); });
    with_output(opt.out + ".dot", [&](std::ostream& out) { io::write_dot(out, p); });
    log << "nodes=" << p.num_nodes() << " arcs=" << p.num_arcs() << " s=" << opt.s;
    if (opt.drop_isolated) log << " removed_isolated=" << removed;
    log << '\n';
    return kOk;
  });
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    auto in = open_in(opt.input);
    const auto g = io::read_graph_json(in);

    if (opt.s_sweep) {
      if (opt.mode != AnalyzeMode::Interaction && opt.mode != AnalyzeMode::Components) {
        throw ConfigError("--s-sweep applies to interaction and components modes");
      }
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (std::size_t s = opt.s_sweep->first; s <= opt.s_sweep->second; ++s) {
        const auto ps = s_line_as_permissible(g, s);
        const auto m = interaction_matrix(ps, class_from_attribute(ps, opt.class_attr));
        nlohmann::ordered_json counts = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (Eigen::Index j = 0; j < m.counts.cols(); ++j) row.push_back(m.counts(i, j));
          counts.push_back(std::move(row));
        }
        nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
        for (const auto& c : weakly_connected_components(ps)) sizes.push_back(c.size());
        doc.push_back({{"s", s},
                       {"arcs", ps.num_arcs()},
                       {"labels", m.labels},
                       {"counts", std::move(counts)},
                       {"component_sizes", std::move(sizes)}});
      }
      with_output(opt.out, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
      log << "sweep s=" << opt.s_sweep->first << ".." << opt.s_sweep->second << '\n';
      return kOk;
    }

    switch (opt.mode) {
      case AnalyzeMode::Interaction: {
        const auto m = interaction_matrix(g, class_from_attribute(g, opt.class_attr));
        with_output(opt.out, [&](std::ostream& out) { io::write_interaction_csv(out, m); });
        log << "classes=" << m.labels.size() << " arcs=" << m.counts.sum() << '\n';
        break;
      }
      case AnalyzeMode::Components: {
        const auto comps = weakly_connected_components(g);
        with_output(opt.out, [&](std::ostream& out) { io::write_components_json(out, g, comps); });
        log << "components=" << comps.size() << '\n';
        break;
      }
      case AnalyzeMode::Downstream: {
        auto node = g.find(opt.node);
        if (!node) throw Error(Errc::UnknownNode, "no node named '" + opt.node + "'");
        const auto neighbors = downstream_neighbors(g, *node);
        const auto reachable = downstream_reachable(g, *node);
        nlohmann::ordered_json doc{{"node", opt.node},
                           {"neighbors", node_names(g, neighbors)},
                           {"reachable", node_names(g, reachable)}};
        with_output(opt.out, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
        log << "neighbors=" << neighbors.size() << " reachable=" << reachable.size() << '\n';
        break;
      }
      case AnalyzeMode::Trace: {
        if (opt.samples == 0) throw ConfigError("--samples must be positive");
        std::vector<Interval> intervals;
        for (std::size_t n = 0; n < g.num_nodes(); ++n) {
          const auto& value = require(g.attrs[n], opt.attr, "node '" + g.names[n] + "'");
          if (const auto* ts = std::get_if<Timestamp>(&value)) {
            intervals.push_back({ts->t, ts->t});
          } else {
            intervals.push_back(get_as<Interval>(value));
          }
        }
        const auto points = trace(intervals, opt.samples);
        with_output(opt.out, [&](std::ostream& out) { io::write_trace_csv(out, points); });
        log << "intervals=" << intervals.size() << " samples=" << points.size() << '\n';
        break;
      }
    }
    return kOk;
  });
}

int run_synth(const SynthOptions& opt, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.classes.size() != 2) throw ConfigError("--classes expects exactly two labels");
    if (opt.users < 2) throw ConfigError("--users must be at least 2");
    MigrationConfig config;
    config.users = opt.users;
    config.class_a = opt.classes[0];
    config.class_b = opt.classes[1];
    config.migration_time = opt.migration_time;
    config.horizon = opt.horizon;
    config.seed = opt.seed;
    const auto posts = synth_migration(config);
    with_output(opt.out, [&](std::ostream& out) { write_posts_csv(out, posts); });
    log << "users=" << posts.users.size() << " threads=" << posts.threads.size()
        << " posts=" << posts.num_posts() << '\n';
    return kOk;
  });
}

}  // namespace pwalk::cli
