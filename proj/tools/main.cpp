#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace pwalk::cli;

int main(int argc, char** argv) {
  CLI::App app{"pwalk: permissible walk graphs of attributed hypergraphs"};
  app.require_subcommand(1);

  const std::map<std::string, InputFormat> formats{{"auto", InputFormat::Auto},
                                                   {"posts-csv", InputFormat::PostsCsv},
                                                   {"hypergraph-json", InputFormat::HypergraphJson},
                                                   {"arcs-csv", InputFormat::ArcsCsv}};
  const std::map<std::string, AnalyzeMode> modes{{"interaction", AnalyzeMode::Interaction},
                                                 {"components", AnalyzeMode::Components},
                                                 {"downstream", AnalyzeMode::Downstream},
                                                 {"trace", AnalyzeMode::Trace}};

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Validate input and write hypergraph JSON");
  build_cmd->add_option("input", build.input, "posts CSV, arcs CSV or hypergraph JSON")->required();
  build_cmd->add_option("--format", build.format, "Input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  build_cmd->add_option("--min-edge-size", build.min_edge_size, "Drop edges with fewer members");
  build_cmd->add_option("--out", build.out, "Output JSON path ('-' for stdout)")->required();

  PermissibleOptions perm;
  auto* perm_cmd = app.add_subcommand("permissible", "Build a permissible walk graph");
  perm_cmd->add_option("input", perm.input, "Hypergraph JSON (or any build input)")->required();
  perm_cmd->add_option("--format", perm.format, "Input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  perm_cmd->add_option("--s", perm.s, "Minimum shared vertices per line-graph edge")
      ->check(CLI::NonNegativeNumber);
  perm_cmd->add_option("--predicate", perm.predicates,
                       "attr:spec or and(attr:spec,...); repeated predicates are intersected");
  perm_cmd->add_option("--attr", perm.attributes, "Edge attribute to carry onto nodes");
  perm_cmd->add_option("--marginalize", perm.marginalize,
                       "attr=set-union|interval-hull: reduce an incidence attribute onto edges");
  perm_cmd->add_option("--min-edge-size", perm.min_edge_size, "Drop edges with fewer members");
  perm_cmd->add_flag("--drop-isolated", perm.drop_isolated, "Remove nodes with no arcs");
  perm_cmd->add_option("--out", perm.out, "Output prefix (<out>.json, <out>.dot)")->required();

  AnalyzeOptions analyze;
  std::string sweep;
  auto* analyze_cmd = app.add_subcommand("analyze", "Reports on a permissible graph JSON");
  analyze_cmd->add_option("input", analyze.input, "Permissible graph JSON")->required();
  analyze_cmd->add_option("--mode", analyze.mode, "interaction | components | downstream | trace")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  analyze_cmd->add_option("--class-attr", analyze.class_attr, "Category attribute for classes");
  analyze_cmd->add_option("--node", analyze.node, "Start node for downstream mode");
  analyze_cmd->add_option("--attr", analyze.attr, "Interval attribute for trace mode");
  analyze_cmd->add_option("--samples", analyze.samples, "Trace sample count")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--s-sweep", sweep, "Repeat interaction+components for s in a..b");
  analyze_cmd->add_option("--out", analyze.out, "Output path ('-' for stdout)");

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic migration post log");
  synth_cmd->add_option("--users", synth.users, "Number of users");
  synth_cmd->add_option("--classes", synth.classes, "Two class labels (before, after)")
      ->delimiter(',');
  synth_cmd->add_option("--migration-time", synth.migration_time, "Class switch time");
  synth_cmd->add_option("--horizon", synth.horizon, "End of the simulated period");
  synth_cmd->add_option("--seed", synth.seed, "RNG seed");
  synth_cmd->add_option("--out", synth.out, "Output CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  auto log_for = [](const std::string& out) -> std::ostream& {
    return out == "-" ? std::cerr : std::cout;
  };

  if (*build_cmd) return run_build(build, log_for(build.out), std::cerr);
  if (*perm_cmd) return run_permissible(perm, std::cout, std::cerr);
  if (*analyze_cmd) {
    if (!sweep.empty()) {
      analyze.s_sweep = parse_sweep(sweep);
      if (!analyze.s_sweep) {
        std::cerr << "error: --s-sweep expects a..b with a <= b\n";
        return kConfigError;
      }
    }
    if (analyze.mode == AnalyzeMode::Downstream && analyze.node.empty()) {
      std::cerr << "error: downstream mode needs --node\n";
      return kConfigError;
    }
    return run_analyze(analyze, log_for(analyze.out), std::cerr);
  }
  return run_synth(synth, log_for(synth.out), std::cerr);
}
