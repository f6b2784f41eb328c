#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cksrank/graph.hpp"

namespace cksrank {

using community_t = std::uint32_t;

/// Disjoint cover of the node set. Community ids are dense in [0, C) and
/// numbered by the smallest node index they contain.
struct CommunityPartition {
  std::vector<community_t> assignment;          // node -> community
  std::vector<std::vector<node_t>> members;     // community -> sorted nodes

  std::size_t community_count() const noexcept { return members.size(); }
  std::size_t size_of(community_t c) const noexcept { return members[c].size(); }
  community_t community_of(node_t v) const noexcept { return assignment[v]; }

  /// Normalizes arbitrary labels (any integers) into the canonical numbering.
  static CommunityPartition from_labels(std::span<const std::uint64_t> labels);
  static CommunityPartition singletons(std::size_t n);
  static CommunityPartition whole(std::size_t n);
};

struct LouvainOptions {
  std::uint64_t seed = 0;
  // A move or a level must raise modularity by more than this to count.
  double min_gain = 1e-7;
};

struct LouvainResult {
  CommunityPartition partition;
  // Modularity on the input graph after each completed level, starting with
  // the singleton partition.
  std::vector<double> level_modularity;
};

/// Louvain modularity optimization: local moving over a seed-shuffled node
/// order, then aggregation, until a level brings no gain. Deterministic for a
/// fixed (graph, seed).
LouvainResult louvain_with_trace(const Graph& g, const LouvainOptions& options);
CommunityPartition louvain(const Graph& g, std::uint64_t seed);

/// Newman modularity. Throws ParameterError when the graph has no edges.
double modularity(const Graph& g, const CommunityPartition& p);

}  // namespace cksrank
