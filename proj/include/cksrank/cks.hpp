#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cksrank/community.hpp"
#include "cksrank/graph.hpp"
#include "cksrank/kshell.hpp"
#include "cksrank/score_table.hpp"

namespace cksrank {

// Base of the logarithm inside the shell entropy.
inline constexpr double kEntropyLogBase = 10.0;

/// How node v's edges into community c spread over c's community shells.
struct ConnectionProfile {
  node_t node = 0;
  community_t community = 0;
  std::map<shell_t, std::uint32_t> eta_per_shell;  // shell -> neighbor count, all > 0
  std::uint32_t eta_total = 0;                     // edges from node into community
};

/// Counts v's neighbors inside c by their community shell. Throws
/// ContractViolation when v has no neighbor in c.
ConnectionProfile connection_profile(const Graph& g, const CommunityPartition& p,
                                     const CommunityShellAssignment& shells, node_t v,
                                     community_t c);

/// K-shell entropy of one node/community connection:
///   -sum_s  s * (eta_s / eta) * log10(eta_s / eta)
/// over shells with eta_s > 0. Zero exactly when every edge hits one shell.
/// Throws ContractViolation on an empty profile.
double kse(const ConnectionProfile& profile);

/// Same quantity from raw (shell, count) pairs; zero counts are skipped.
double kse(std::span<const std::pair<shell_t, std::uint32_t>> shell_counts);

/// Whether a node's own community takes part in its score. The inclusive
/// reading is the default; the exclusive one exists for sensitivity runs.
enum class CommunityScope { include_own, exclude_own };

struct CksOptions {
  CommunityScope scope = CommunityScope::include_own;
};

/// CKS_Score(v) = sum over communities c touched by v's edges of
///   |c| * KSE(v, c) * eta(v, c).
/// Zero for a node without neighbors.
double cks_score(const Graph& g, const CommunityPartition& p,
                 const CommunityShellAssignment& shells, node_t v, CksOptions options = {});

/// Scores of all nodes; nodes are independent, so the loop is OpenMP-parallel.
std::vector<double> cks_scores(const Graph& g, const CommunityPartition& p,
                               const CommunityShellAssignment& shells, CksOptions options = {});
std::vector<double> cks_scores_serial(const Graph& g, const CommunityPartition& p,
                                      const CommunityShellAssignment& shells,
                                      CksOptions options = {});

/// Full pipeline: Louvain(seed) -> community K-shells -> CKS scores.
ScoreTable rank_by_cks(const Graph& g, std::uint64_t seed, CksOptions options = {});

}  // namespace cksrank
