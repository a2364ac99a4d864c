#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwalk/hypergraph.hpp"

namespace pwalk::cli {

enum class InputFormat { Auto, PostsCsv, HypergraphJson, ArcsCsv };

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kConfigError = 2;

/// Loads any supported input; Auto sniffs the first line.
AttributedHypergraph load_input(const std::string& path, InputFormat format);

struct BuildOptions {
  std::string input;
  InputFormat format = InputFormat::Auto;
  std::size_t min_edge_size = 0;
  std::string out;  // "-" for stdout
};

struct PermissibleOptions {
  std::string input;
  InputFormat format = InputFormat::Auto;
  std::size_t s = 1;
  std::vector<std::string> predicates;     // "attr:spec" or "and(...)"
  std::vector<std::string> attributes;     // extra node attributes to carry
  std::vector<std::string> marginalize;    // "attr=set-union" / "attr=interval-hull"
  std::size_t min_edge_size = 0;
  bool drop_isolated = false;
  std::string out;  // prefix; writes <out>.json and <out>.dot
};

enum class AnalyzeMode { Interaction, Components, Downstream, Trace };

struct AnalyzeOptions {
  std::string input;
  AnalyzeMode mode = AnalyzeMode::Interaction;
  std::string class_attr = "class";
  std::string node;
  std::string attr = "time";
  std::size_t samples = 2000;
  std::optional<std::pair<std::size_t, std::size_t>> s_sweep;
  std::string out = "-";
};

struct SynthOptions {
  std::size_t users = 1000;
  std::vector<std::string> classes{"A", "B"};
  double migration_time = 50.0;
  double horizon = 100.0;
  std::uint64_t seed = 1;
  std::string out = "-";
};

/// Each command writes its files, prints a one-line summary to `log` and returns an exit
/// code. Library errors are reported on `err`.
int run_build(const BuildOptions& opt, std::ostream& log, std::ostream& err);
int run_permissible(const PermissibleOptions& opt, std::ostream& log, std::ostream& err);
int run_analyze(const AnalyzeOptions& opt, std::ostream& log, std::ostream& err);
int run_synth(const SynthOptions& opt, std::ostream& log, std::ostream& err);

/// Parses "a..b" (inclusive, a <= b).
std::optional<std::pair<std::size_t, std::size_t>> parse_sweep(const std::string& text);

}  // namespace pwalk::cli
