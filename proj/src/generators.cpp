#include "cksrank/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cksrank/errors.hpp"
#include "cksrank/rng.hpp"

namespace cksrank {

namespace {

void check_growth_params(std::size_t n, std::size_t m_attach) {
  if (m_attach < 1) throw ParameterError("m_attach must be >= 1");
  if (m_attach >= n) {
    throw ParameterError("m_attach (" + std::to_string(m_attach) + ") must be < n (" +
                         std::to_string(n) + ")");
  }
}

Graph grow(std::size_t n, std::size_t m_attach, double p_tri, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m_attach * (n - m_attach));
  // Each node appears once per incident edge end: sampling an entry is
  // sampling proportional to degree.
  std::vector<node_t> ends;
  ends.reserve(2 * m_attach * (n - m_attach));
  std::vector<std::vector<node_t>> adj(n);

  auto link = [&](node_t u, node_t v) {
    edges.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  };

  for (node_t leaf = 1; leaf <= m_attach; ++leaf) {
    link(0, leaf);
    ends.push_back(0);
    ends.push_back(leaf);
  }

  std::vector<node_t> linked;
  std::vector<node_t> candidates;
  for (auto source = static_cast<node_t>(m_attach + 1); source < n; ++source) {
    linked.clear();
    node_t last_target = 0;
    bool have_target = false;
    auto already = [&](node_t v) {
      return std::find(linked.begin(), linked.end(), v) != linked.end();
    };
    while (linked.size() < m_attach) {
      if (have_target && p_tri > 0.0 && rng.next_unit() < p_tri) {
        candidates.clear();
        for (node_t w : adj[last_target]) {
          if (w != source && !already(w)) candidates.push_back(w);
        }
        if (!candidates.empty()) {
          node_t w = candidates[rng.next_index(candidates.size())];
          linked.push_back(w);
          link(source, w);
          continue;
        }
      }
      node_t target;
      do {
        target = ends[rng.next_index(ends.size())];
      } while (already(target));
      linked.push_back(target);
      last_target = target;
      have_target = true;
      link(source, target);
    }
    // Degree weights of this node's links take effect for later nodes only.
    for (node_t w : linked) {
      ends.push_back(w);
      ends.push_back(source);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate_ba(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  check_growth_params(n, m_attach);
  return grow(n, m_attach, 0.0, seed);
}

Graph generate_powerlaw_cluster(std::size_t n, std::size_t m_attach, double p_tri,
                                std::uint64_t seed) {
  check_growth_params(n, m_attach);
  if (!(p_tri >= 0.0 && p_tri <= 1.0)) throw ParameterError("p_tri must lie in [0, 1]");
  return grow(n, m_attach, p_tri, seed);
}

}  // namespace cksrank
