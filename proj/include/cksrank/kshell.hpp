#pragma once

#include <cstdint>
#include <vector>

#include "cksrank/community.hpp"
#include "cksrank/graph.hpp"

namespace cksrank {

using shell_t = std::uint32_t;

struct ShellAssignment {
  std::vector<shell_t> shell;  // >= 1 for every node
  shell_t max_shell = 0;
};

/// Iterative peeling: at stage k every node whose residual degree is <= k is
/// removed (repeatedly) and receives shell k, starting from k = 1. Nodes
/// without neighbors land in shell 1. Bucketed, O(n + m).
ShellAssignment kshell_decomposition(const Graph& g);

/// Same node set and labels, only intra-community edges.
Graph isolate_communities(const Graph& g, const CommunityPartition& p);

struct CommunityShellAssignment {
  std::vector<shell_t> cks;  // node -> shell inside its own community
  // community -> ascending distinct shell values among its members
  std::vector<std::vector<shell_t>> shells_per_community;
};

/// Community K-Shell: peels every community as its own graph, one community
/// per OpenMP task.
CommunityShellAssignment community_kshell(const Graph& g, const CommunityPartition& p);

/// Reference path: global peeling of isolate_communities(g, p). Must agree
/// with community_kshell() bit for bit.
CommunityShellAssignment community_kshell_serial(const Graph& g, const CommunityPartition& p);

}  // namespace cksrank
