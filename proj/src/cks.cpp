#include "cksrank/cks.hpp"

#include <algorithm>
#include <cmath>

#include "cksrank/errors.hpp"

namespace cksrank {

namespace {

double entropy_log(double x) {
  if constexpr (kEntropyLogBase == 10.0) {
    return std::log10(x);
  } else {
    return std::log(x) / std::log(kEntropyLogBase);
  }
}

struct NeighborTag {
  community_t community;
  shell_t shell;
  auto operator<=>(const NeighborTag&) const = default;
};

// Scores one node using a caller-owned scratch buffer.
double score_node(const Graph& g, const CommunityPartition& p,
                  const CommunityShellAssignment& shells, node_t v, CksOptions options,
                  std::vector<NeighborTag>& tags,
                  std::vector<std::pair<shell_t, std::uint32_t>>& counts) {
  tags.clear();
  for (node_t w : g.neighbors(v)) tags.push_back({p.assignment[w], shells.cks[w]});
  std::sort(tags.begin(), tags.end());

  const community_t own = p.assignment[v];
  double score = 0.0;
  std::size_t i = 0;
  while (i < tags.size()) {
    const community_t c = tags[i].community;
    counts.clear();
    std::uint32_t eta = 0;
    while (i < tags.size() && tags[i].community == c) {
      const shell_t s = tags[i].shell;
      std::uint32_t run = 0;
      while (i < tags.size() && tags[i].community == c && tags[i].shell == s) {
        ++run;
        ++i;
      }
      counts.emplace_back(s, run);
      eta += run;
    }
    if (options.scope == CommunityScope::exclude_own && c == own) continue;
    score += static_cast<double>(p.size_of(c)) * kse(counts) * static_cast<double>(eta);
  }
  return score;
}

}  // namespace

ConnectionProfile connection_profile(const Graph& g, const CommunityPartition& p,
                                     const CommunityShellAssignment& shells, node_t v,
                                     community_t c) {
  ConnectionProfile profile;
  profile.node = v;
  profile.community = c;
  for (node_t w : g.neighbors(v)) {
    if (p.assignment[w] != c) continue;
    ++profile.eta_per_shell[shells.cks[w]];
    ++profile.eta_total;
  }
  if (profile.eta_total == 0) {
    throw ContractViolation("node " + std::to_string(v) + " has no neighbor in community " +
                            std::to_string(c));
  }
  return profile;
}

double kse(std::span<const std::pair<shell_t, std::uint32_t>> shell_counts) {
  std::uint64_t total = 0;
  for (auto [shell, count] : shell_counts) total += count;
  if (total == 0) throw ContractViolation("shell entropy of an empty connection profile");
  const auto eta = static_cast<double>(total);
  double sum = 0.0;
  for (auto [shell, count] : shell_counts) {
    if (count == 0) continue;
    const double share = static_cast<double>(count) / eta;
    sum += static_cast<double>(shell) * share * entropy_log(share);
  }
  // -0.0 for single-shell profiles; report a clean zero.
  return sum == 0.0 ? 0.0 : -sum;
}

double kse(const ConnectionProfile& profile) {
  std::vector<std::pair<shell_t, std::uint32_t>> counts(profile.eta_per_shell.begin(),
                                                        profile.eta_per_shell.end());
  return kse(counts);
}

double cks_score(const Graph& g, const CommunityPartition& p,
                 const CommunityShellAssignment& shells, node_t v, CksOptions options) {
  std::vector<NeighborTag> tags;
  std::vector<std::pair<shell_t, std::uint32_t>> counts;
  return score_node(g, p, shells, v, options, tags, counts);
}

std::vector<double> cks_scores(const Graph& g, const CommunityPartition& p,
                               const CommunityShellAssignment& shells, CksOptions options) {
  const auto n = static_cast<std::int64_t>(g.node_count());
  std::vector<double> scores(g.node_count(), 0.0);
#pragma omp parallel
  {
    std::vector<NeighborTag> tags;
    std::vector<std::pair<shell_t, std::uint32_t>> counts;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t v = 0; v < n; ++v) {
      scores[v] = score_node(g, p, shells, static_cast<node_t>(v), options, tags, counts);
    }
  }
  return scores;
}

std::vector<double> cks_scores_serial(const Graph& g, const CommunityPartition& p,
                                      const CommunityShellAssignment& shells,
                                      CksOptions options) {
  std::vector<double> scores(g.node_count(), 0.0);
  std::vector<NeighborTag> tags;
  std::vector<std::pair<shell_t, std::uint32_t>> counts;
  for (node_t v = 0; v < g.node_count(); ++v) {
    scores[v] = score_node(g, p, shells, v, options, tags, counts);
  }
  return scores;
}

ScoreTable rank_by_cks(const Graph& g, std::uint64_t seed, CksOptions options) {
  CommunityPartition partition = louvain(g, seed);
  CommunityShellAssignment shells = community_kshell(g, partition);
  return ScoreTable::from_scores(Method::CKS, cks_scores(g, partition, shells, options));
}

}  // namespace cksrank
