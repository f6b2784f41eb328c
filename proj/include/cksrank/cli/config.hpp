#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cksrank/graph.hpp"
#include "cksrank/score_table.hpp"

namespace cksrank::cli {

/// Either a local edge-list file or a synthetic generator.
struct DatasetSpec {
  std::string name;
  std::filesystem::path path;  // set for file datasets
  bool directed = false;
  std::string generator;  // "ba" or "pcg" for synthetic datasets
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  bool synthetic() const noexcept { return !generator.empty(); }
};

/// Run configuration, read from a JSON file (see docs/config.md) with command
/// line flags layered on top.
struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<Method> methods{kCompared.begin(), kCompared.end()};
  std::optional<std::vector<double>> fractions;  // default: grid chosen by n
  std::vector<double> probabilities;             // default: protocol grid
  double sweep_fraction = 0.03;
  double activation_probability = 0.1;
  std::size_t replicates = 100;
  std::uint64_t master_seed = 1;
  std::filesystem::path output_dir = "out";
  int workers = 0;  // 0 keeps the OpenMP default
  bool timing = true;

  ExperimentConfig();
  /// Throws ParameterError describing the first violated constraint.
  void validate() const;
};

ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& json_text);

/// Canonical JSON of the parts that determine results (excludes workers and
/// output directory).
std::string canonical_config(const ExperimentConfig& config);
/// FNV-1a 64 of canonical_config(), as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Parses "ba:n=2000,m=5,seed=7" / "pcg:n=2000,m=5,p=0.3,seed=7" or treats the
/// text as an edge-list path.
DatasetSpec dataset_from_argument(const std::string& text, bool directed);

Graph load_dataset(const DatasetSpec& spec);

}  // namespace cksrank::cli
