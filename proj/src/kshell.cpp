#include "cksrank/kshell.hpp"

#include <algorithm>

#include "cksrank/errors.hpp"

namespace cksrank {

namespace {

// Batagelj–Zaversnik bucket peeling over a CSR adjacency. Writes the core
// number of each vertex into `core`.
void peel(std::span<const std::size_t> offsets, std::span<const node_t> adjacency,
          std::vector<shell_t>& core) {
  const std::size_t n = offsets.size() - 1;
  core.assign(n, 0);
  if (n == 0) return;
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = offsets[v + 1] - offsets[v];
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::size_t> bin(max_degree + 1, 0);
  for (std::size_t v = 0; v < n; ++v) ++bin[degree[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<std::size_t> position(n);
  std::vector<node_t> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    position[v] = bin[degree[v]]++;
    order[position[v]] = static_cast<node_t>(v);
  }
  for (std::size_t d = max_degree; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    node_t v = order[i];
    core[v] = static_cast<shell_t>(degree[v]);
    for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) {
      node_t u = adjacency[e];
      if (degree[u] > degree[v]) {
        std::size_t du = degree[u];
        std::size_t pu = position[u];
        std::size_t pw = bin[du];
        node_t w = order[pw];
        if (u != w) {
          position[u] = pw;
          order[pu] = w;
          position[w] = pu;
          order[pw] = u;
        }
        ++bin[du];
        --degree[u];
      }
    }
  }
  // Degree-0 vertices are peeled at the first stage.
  for (auto& c : core) c = std::max<shell_t>(c, 1);
}

std::vector<std::vector<shell_t>> distinct_shells(const CommunityPartition& p,
                                                  const std::vector<shell_t>& cks) {
  std::vector<std::vector<shell_t>> shells(p.community_count());
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    auto& s = shells[c];
    for (node_t v : p.members[c]) s.push_back(cks[v]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return shells;
}

}  // namespace

ShellAssignment kshell_decomposition(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<node_t> adjacency;
  adjacency.reserve(2 * g.edge_count());
  for (node_t v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    adjacency.insert(adjacency.end(), nbrs.begin(), nbrs.end());
    offsets[v + 1] = adjacency.size();
  }
  ShellAssignment out;
  peel(offsets, adjacency, out.shell);
  for (shell_t s : out.shell) out.max_shell = std::max(out.max_shell, s);
  return out;
}

Graph isolate_communities(const Graph& g, const CommunityPartition& p) {
  if (p.assignment.size() != g.node_count()) {
    throw ContractViolation("partition does not cover the graph's node set");
  }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (p.assignment[u] == p.assignment[v]) kept.emplace_back(u, v);
  }
  return Graph::from_edges(g.node_count(), kept, g.labels());
}

CommunityShellAssignment community_kshell(const Graph& g, const CommunityPartition& p) {
  if (p.assignment.size() != g.node_count()) {
    throw ContractViolation("partition does not cover the graph's node set");
  }
  CommunityShellAssignment out;
  out.cks.assign(g.node_count(), 1);
  const auto communities = static_cast<std::int64_t>(p.community_count());

#pragma omp parallel
  {
    std::vector<std::uint32_t> local_index(g.node_count(), 0);
    std::vector<std::size_t> offsets;
    std::vector<node_t> adjacency;
    std::vector<shell_t> core;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < communities; ++ci) {
      const auto c = static_cast<community_t>(ci);
      const auto& members = p.members[c];
      for (std::size_t i = 0; i < members.size(); ++i) {
        local_index[members[i]] = static_cast<std::uint32_t>(i);
      }
      offsets.assign(members.size() + 1, 0);
      adjacency.clear();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (node_t w : g.neighbors(members[i])) {
          if (p.assignment[w] == c) adjacency.push_back(local_index[w]);
        }
        offsets[i + 1] = adjacency.size();
      }
      peel(offsets, adjacency, core);
      for (std::size_t i = 0; i < members.size(); ++i) out.cks[members[i]] = core[i];
    }
  }
  out.shells_per_community = distinct_shells(p, out.cks);
  return out;
}

CommunityShellAssignment community_kshell_serial(const Graph& g, const CommunityPartition& p) {
  CommunityShellAssignment out;
  out.cks = kshell_decomposition(isolate_communities(g, p)).shell;
  out.shells_per_community = distinct_shells(p, out.cks);
  return out;
}

}  // namespace cksrank
