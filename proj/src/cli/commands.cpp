#include "cksrank/cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "cksrank/baselines.hpp"
#include "cksrank/community.hpp"
#include "cksrank/errors.hpp"
#include "cksrank/experiments.hpp"
#include "cksrank/generators.hpp"
#include "cksrank/rng.hpp"
#include "cksrank/stats.hpp"
#include "cksrank/version.hpp"

namespace cksrank::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const IoError*>(&e) != nullptr) return kExitIo;
  if (dynamic_cast<const ContractViolation*>(&e) != nullptr) return kExitInternal;
  if (dynamic_cast<const Error*>(&e) != nullptr) return kExitValidation;
  return kExitInternal;
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char ch : name) {
    const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                      (ch >= '0' && ch <= '9') || ch == '-' || ch == '_' || ch == '.';
    out += keep ? ch : '_';
  }
  return out.empty() ? "dataset" : out;
}

namespace {

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

// Sidecar next to every result file: enough to re-run and verify it.
void write_manifest(const fs::path& file, const std::string& command, const json& parameters,
                    const std::string& hash, std::uint64_t seed) {
  json m;
  m["file"] = file.filename().string();
  m["command"] = command;
  m["tool"] = "cksrank";
  m["version"] = std::string(kVersion);
  m["config_hash"] = hash;
  m["master_seed"] = seed;
  m["rng"] = std::string(kRngIdentity);
  m["parameters"] = parameters;
  fs::path sidecar = file;
  sidecar += ".manifest.json";
  auto out = open_output(sidecar);
  out << m.dump(2) << '\n';
  close_output(out, sidecar);
}

template <typename Writer>
fs::path emit(const fs::path& path, Writer&& writer, const std::string& command,
              const json& parameters, const std::string& hash, std::uint64_t seed) {
  auto out = open_output(path);
  writer(out);
  close_output(out, path);
  write_manifest(path, command, parameters, hash, seed);
  return path;
}

json config_json(const ExperimentConfig& config) { return json::parse(canonical_config(config)); }

}  // namespace

std::vector<fs::path> cmd_rank(const ExperimentConfig& config) {
  config.validate();
  ensure_directory(config.output_dir);
  const auto hash = config_hash(config);
  const auto params = config_json(config);
  std::vector<fs::path> written;
  for (const auto& dataset : config.datasets) {
    const Graph g = load_dataset(dataset);
    for (Method method : config.methods) {
      const ScoreTable table = rank_nodes(method, g, config.master_seed);
      const fs::path path = config.output_dir / ("rank_" + file_stem(dataset.name) + "_" +
                                                 std::string(method_name(method)) + ".csv");
      written.push_back(emit(
          path, [&](std::ostream& out) { write_score_table_csv(out, table, g); }, "rank", params,
          hash, config.master_seed));
    }
  }
  return written;
}

std::vector<fs::path> cmd_experiment(const ExperimentConfig& config) {
  config.validate();
  ensure_directory(config.output_dir);
  const auto hash = config_hash(config);
  const auto params = config_json(config);
  const std::uint64_t seed = config.master_seed;
  std::vector<fs::path> written;

  ResultMatrix matrix;
  for (Method m : config.methods) matrix.algorithms.emplace_back(method_name(m));

  for (const auto& dataset : config.datasets) {
    const Graph g = load_dataset(dataset);
    const std::string stem = file_stem(dataset.name);
    std::vector<double> fractions;
    if (config.fractions) {
      fractions = *config.fractions;
    } else {
      auto grid = fraction_grid_for(g.node_count());
      fractions.assign(grid.begin(), grid.end());
    }

    std::vector<ExperimentCurve> by_fraction, by_probability, distance;
    std::vector<TimingRecord> timings;
    std::ostringstream unreachable;
    unreachable << "method,x,unreachable_pairs\n";
    for (Method method : config.methods) {
      const ScoreTable ranking = rank_nodes(method, g, seed);
      try {
        by_fraction.push_back(infected_vs_fraction(g, ranking, dataset.name, fractions,
                                                   config.activation_probability,
                                                   config.replicates, seed));
        by_probability.push_back(infected_vs_probability(g, ranking, dataset.name,
                                                         config.probabilities, config.sweep_fraction,
                                                         config.replicates, seed));
      } catch (const Error& e) {
        throw ParameterError("dataset '" + dataset.name + "', method " +
                             std::string(method_name(method)) + ": " + e.what());
      }
      ExperimentCurve ls{method, dataset.name, XAxis::spreader_fraction, {}};
      for (double f : fractions) {
        SeedSet seeds = select_seeds(ranking, f, g.node_count());
        if (seeds.seeds.size() < 2) continue;
        SpreaderDistance d = average_spreader_distance(g, seeds.seeds);
        // The seed set is deterministic, so each point is a single evaluation.
        ls.points.push_back({f, d.mean, 0.0, 1});
        unreachable << method_name(method) << ',' << f << ',' << d.unreachable_pairs << '\n';
      }
      distance.push_back(std::move(ls));
      if (config.timing) timings.push_back(time_ranking(method, g, dataset.name, seed));
    }

    for (std::size_t i = 0; i < fractions.size(); ++i) {
      std::ostringstream label;
      label << dataset.name << '@' << fractions[i];
      matrix.problems.push_back(label.str());
      for (const auto& curve : by_fraction) matrix.values.push_back(curve.points[i].mean);
    }

    auto curves_writer = [](const std::vector<ExperimentCurve>& curves) {
      return [&curves](std::ostream& out) {
        write_curve_csv_header(out);
        for (const auto& c : curves) write_curve_csv_rows(out, c);
      };
    };
    written.push_back(emit(config.output_dir / ("fig4_" + stem + ".csv"), curves_writer(by_fraction),
                           "experiment", params, hash, seed));
    written.push_back(emit(config.output_dir / ("fig5_" + stem + ".csv"),
                           curves_writer(by_probability), "experiment", params, hash, seed));
    written.push_back(emit(config.output_dir / ("fig6_" + stem + ".csv"), curves_writer(distance),
                           "experiment", params, hash, seed));
    written.push_back(emit(
        config.output_dir / ("fig6_" + stem + ".unreachable.csv"),
        [&](std::ostream& out) { out << unreachable.str(); }, "experiment", params, hash, seed));
    if (config.timing) {
      written.push_back(emit(
          config.output_dir / ("fig7_" + stem + ".csv"),
          [&](std::ostream& out) { write_timing_csv(out, timings); }, "experiment", params, hash,
          seed));
    }
  }

  written.push_back(emit(
      config.output_dir / "result_matrix.csv",
      [&](std::ostream& out) { write_result_matrix_csv(out, matrix); }, "experiment", params, hash,
      seed));
  return written;
}

std::vector<fs::path> cmd_stats(const StatsRequest& request) {
  std::ifstream in(request.input);
  if (!in) throw IoError("cannot open '" + request.input.string() + "'");
  std::string header;
  std::getline(in, header);
  in.seekg(0);

  FriedmanReport report;
  if (header.rfind("algorithm,", 0) == 0) {
    if (!request.problems) {
      throw ParameterError("an average-ranks input needs the number of problems (--problems)");
    }
    auto [names, ranks] = read_average_ranks_csv(in);
    report = friedman_report(ranks, names, *request.problems, request.control, request.alpha);
  } else {
    report = friedman_report(read_result_matrix_csv(in), request.control, request.alpha);
  }

  ensure_directory(request.output_dir);
  json params;
  params["input"] = request.input.filename().string();
  params["control"] = request.control;
  params["alpha"] = request.alpha;
  params["problems"] = report.problems;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : params.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hash;
  hash << std::hex << h;

  std::vector<fs::path> written;
  written.push_back(emit(
      request.output_dir / "table2_ranks.csv",
      [&](std::ostream& out) { write_rank_table_csv(out, report); }, "stats", params, hash.str(), 0));
  written.push_back(emit(
      request.output_dir / "table3_holm.csv",
      [&](std::ostream& out) { write_holm_table_csv(out, report); }, "stats", params, hash.str(), 0));
  written.push_back(emit(
      request.output_dir / "stats.json",
      [&](std::ostream& out) { out << friedman_report_json(report) << '\n'; }, "stats", params,
      hash.str(), 0));
  return written;
}

fs::path cmd_generate(const GenerateRequest& request) {
  Graph g;
  if (request.kind == "ba") {
    g = generate_ba(request.n, request.m, request.seed);
  } else if (request.kind == "pcg") {
    g = generate_powerlaw_cluster(request.n, request.m, request.p, request.seed);
  } else {
    throw ParameterError("unknown generator '" + request.kind + "' (expected ba or pcg)");
  }
  if (request.output.has_parent_path()) ensure_directory(request.output.parent_path());
  json params;
  params["kind"] = request.kind;
  params["n"] = request.n;
  params["m"] = request.m;
  if (request.kind == "pcg") params["p"] = request.p;
  params["seed"] = request.seed;
  std::ostringstream hash;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : params.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  hash << std::hex << h;
  return emit(
      request.output,
      [&](std::ostream& out) {
        out << "# " << request.kind << " n=" << request.n << " m=" << request.m;
        if (request.kind == "pcg") out << " p=" << request.p;
        out << " seed=" << request.seed << '\n';
        write_edge_list(out, g);
      },
      "generate", params, hash.str(), request.seed);
}

std::vector<GraphSummary> cmd_summary(const ExperimentConfig& config, bool with_communities,
                                      std::ostream& out) {
  if (config.datasets.empty()) throw ParameterError("no dataset given");
  std::vector<GraphSummary> summaries;
  out << "dataset,nodes,edges,communities\n";
  for (const auto& dataset : config.datasets) {
    const Graph g = load_dataset(dataset);
    GraphSummary s;
    if (with_communities) {
      const auto partition = louvain(g, config.master_seed);
      s = graph_summary(g, dataset.name, &partition);
    } else {
      s = graph_summary(g, dataset.name);
    }
    out << s.source_name << ',' << s.nodes << ',' << s.edges << ',';
    if (s.communities) out << *s.communities;
    out << '\n';
    summaries.push_back(std::move(s));
  }
  return summaries;
}

}  // namespace cksrank::cli
