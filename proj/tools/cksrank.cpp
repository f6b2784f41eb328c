#include <omp.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cksrank/cli/commands.hpp"
#include "cksrank/cli/config.hpp"
#include "cksrank/errors.hpp"
#include "cksrank/version.hpp"

using namespace cksrank;
using namespace cksrank::cli;

namespace {

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::vector<std::string> methods;
  std::optional<std::size_t> replicates;
  std::optional<int> workers;
  std::vector<std::string> inputs;
  bool directed = false;
};

ExperimentConfig build_config(const GlobalFlags& flags) {
  ExperimentConfig config = flags.config.empty() ? ExperimentConfig{} : load_config(flags.config);
  if (flags.seed) config.master_seed = *flags.seed;
  if (flags.out) config.output_dir = *flags.out;
  if (flags.replicates) config.replicates = *flags.replicates;
  if (flags.workers) config.workers = *flags.workers;
  if (!flags.methods.empty()) {
    config.methods.clear();
    for (const auto& name : flags.methods) {
      auto m = parse_method(name);
      if (!m) throw ParameterError("unknown method '" + name + "'");
      config.methods.push_back(*m);
    }
  }
  if (!flags.inputs.empty()) {
    config.datasets.clear();
    for (const auto& text : flags.inputs) config.datasets.push_back(dataset_from_argument(text, flags.directed));
  }
  if (config.workers < 0) throw ParameterError("--workers must be >= 0");
  if (config.workers > 0) omp_set_num_threads(config.workers);
  return config;
}

void report(const std::vector<std::filesystem::path>& files) {
  for (const auto& f : files) std::cout << f.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influential spreader ranking with Community K-Shell scores"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config, "JSON run configuration");
  app.add_option("--seed", flags.seed, "master seed");
  app.add_option("--out", flags.out, "output directory (output file for generate)");
  app.add_option("--methods", flags.methods, "methods to run, e.g. CKS,ENC,BC")->delimiter(',');
  app.add_option("--replicates", flags.replicates, "Monte Carlo replicates per point");
  app.add_option("--workers", flags.workers, "OpenMP threads (0 keeps the default)");

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--input,-i", flags.inputs,
                    "edge-list path or generator spec (ba:n=..,m=..,seed=.. / pcg:...,p=..)");
    sub->add_flag("--directed", flags.directed, "input edge lists are directed (symmetrized)");
  };

  auto* rank = app.add_subcommand("rank", "write per-method node rankings");
  add_inputs(rank);

  auto* experiment = app.add_subcommand("experiment", "run the diffusion evaluation sweep");
  add_inputs(experiment);
  std::vector<double> fractions, probabilities;
  std::optional<double> activation, sweep_fraction;
  bool no_timing = false;
  experiment->add_option("--fractions", fractions, "spreader fractions")->delimiter(',');
  experiment->add_option("--probabilities", probabilities, "activation probabilities")->delimiter(',');
  experiment->add_option("--activation", activation, "activation probability for the fraction sweep");
  experiment->add_option("--sweep-fraction", sweep_fraction, "spreader fraction for the probability sweep");
  experiment->add_flag("--no-timing", no_timing, "skip the ranking time measurements");

  auto* stats = app.add_subcommand("stats", "Friedman, Iman-Davenport and Holm tests");
  StatsRequest stats_request;
  std::string stats_input;
  stats->add_option("input", stats_input, "result matrix or average-ranks CSV")->required();
  stats->add_option("--control", stats_request.control, "control algorithm");
  stats->add_option("--alpha", stats_request.alpha, "significance level");
  stats->add_option("--problems", stats_request.problems, "problem count for an average-ranks input");

  auto* generate = app.add_subcommand("generate", "write a synthetic edge list");
  GenerateRequest gen;
  generate->add_option("kind", gen.kind, "ba or pcg")->required()->check(CLI::IsMember({"ba", "pcg"}));
  generate->add_option("--n", gen.n, "node count")->required();
  generate->add_option("--m", gen.m, "edges per new node")->required();
  generate->add_option("--p", gen.p, "triad formation probability (pcg)");

  auto* summary = app.add_subcommand("summary", "print node, edge and community counts");
  add_inputs(summary);
  bool with_communities = false;
  summary->add_flag("--communities", with_communities, "run Louvain and report the community count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (rank->parsed()) {
      report(cmd_rank(build_config(flags)));
    } else if (experiment->parsed()) {
      ExperimentConfig config = build_config(flags);
      if (!fractions.empty()) config.fractions = fractions;
      if (!probabilities.empty()) config.probabilities = probabilities;
      if (activation) config.activation_probability = *activation;
      if (sweep_fraction) config.sweep_fraction = *sweep_fraction;
      if (no_timing) config.timing = false;
      report(cmd_experiment(config));
    } else if (stats->parsed()) {
      stats_request.input = stats_input;
      stats_request.output_dir = flags.out.value_or("out");
      report(cmd_stats(stats_request));
    } else if (generate->parsed()) {
      if (!flags.out) throw ParameterError("generate needs --out <file>");
      gen.output = *flags.out;
      gen.seed = flags.seed.value_or(1);
      std::cout << cmd_generate(gen).string() << '\n';
    } else if (summary->parsed()) {
      cmd_summary(build_config(flags), with_communities, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "cksrank: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
