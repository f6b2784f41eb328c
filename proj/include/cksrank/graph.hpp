#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cksrank {

using node_t = std::uint32_t;
using Edge = std::pair<node_t, node_t>;

// Hop distance marking a node that BFS never reached.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Undirected simple graph in CSR form over dense indices [0, n).
///
/// Every index carries an opaque external label. Neighbor lists are sorted and
/// free of self-loops and duplicates; the graph is immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and duplicate edges are
  /// dropped, orientation is ignored. When `labels` is empty, node i is
  /// labelled by its decimal index.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const node_t> neighbors(node_t v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(node_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(node_t u, node_t v) const noexcept;

  const std::string& label(node_t v) const noexcept { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<node_t> index_of(std::string_view label) const;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<node_t> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_t> index_;
};

/// Reads the whitespace-separated edge-list format: one `u v` pair per line,
/// `#` or `%` starting a comment line, blank lines ignored. Labels receive
/// dense indices in order of first appearance. Directed input is symmetrized.
Graph parse_edge_list(std::istream& in, bool directed_input = false);
Graph read_edge_list_file(const std::filesystem::path& path, bool directed_input = false);

/// Writes one `u v` line per undirected edge using the node labels.
void write_edge_list(std::ostream& out, const Graph& g);

/// Exact hop counts from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, node_t source);

struct CommunityPartition;

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> communities;
  std::string source_name;
};

GraphSummary graph_summary(const Graph& g, std::string source_name,
                           const CommunityPartition* partition = nullptr);

}  // namespace cksrank
