#pragma once

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cksrank/cli/config.hpp"
#include "cksrank/graph.hpp"

namespace cksrank::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInternal = 3;

int exit_code_for(const std::exception& e) noexcept;

/// Writes `rank_<dataset>_<method>.csv` per dataset and method. Returns the
/// written result files (sidecar manifests excluded).
std::vector<std::filesystem::path> cmd_rank(const ExperimentConfig& config);

/// Full evaluation sweep. Per dataset: fig4 (infected scale vs fraction),
/// fig5 (vs activation probability), fig6 (average spreader distance), fig7
/// (ranking time). Across datasets: result_matrix.csv for the stats command.
std::vector<std::filesystem::path> cmd_experiment(const ExperimentConfig& config);

struct StatsRequest {
  std::filesystem::path input;        // result matrix, or average ranks with `problems`
  std::string control = "CKS";
  double alpha = 0.05;
  std::optional<std::size_t> problems;  // required for an average-ranks input
  std::filesystem::path output_dir = "out";
};

/// Writes table2_ranks.csv, table3_holm.csv and stats.json.
std::vector<std::filesystem::path> cmd_stats(const StatsRequest& request);

struct GenerateRequest {
  std::string kind;  // "ba" or "pcg"
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::filesystem::path output;
};

std::filesystem::path cmd_generate(const GenerateRequest& request);

/// Prints `dataset,nodes,edges,communities` rows; communities via Louvain
/// with the config's master seed when requested.
std::vector<GraphSummary> cmd_summary(const ExperimentConfig& config, bool with_communities,
                                      std::ostream& out);

/// Filesystem-safe form of a dataset name.
std::string file_stem(const std::string& name);

}  // namespace cksrank::cli
