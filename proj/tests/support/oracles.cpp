#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace oracle {

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<cksrank::Edge> edges;
  for (node_t u = 0; u < n; ++u) {
    for (node_t v = u + 1; v < n; ++v) {
      if (coin(gen) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<cksrank::Edge> edges;
  for (node_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<cksrank::Edge> edges;
  for (node_t v = 0; v < n; ++v) edges.emplace_back(v, static_cast<node_t>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph clique(std::size_t n) {
  std::vector<cksrank::Edge> edges;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<cksrank::Edge> edges;
  for (node_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph two_cliques_bridge() {
  std::vector<cksrank::Edge> edges;
  for (node_t base : {0u, 4u}) {
    for (node_t u = 0; u < 4; ++u)
      for (node_t v = u + 1; v < 4; ++v) edges.emplace_back(base + u, base + v);
  }
  edges.emplace_back(3, 4);
  return Graph::from_edges(8, edges);
}

Graph triangle_with_pendant() {
  std::vector<cksrank::Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  return Graph::from_edges(4, edges);
}

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (node_t v = 0; v < n; ++v)
    for (node_t w : g.neighbors(v)) a[v][w] = true;
  return a;
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  auto a = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::vector<std::uint32_t> naive_kshell(const Graph& g) {
  const std::size_t n = g.node_count();
  auto a = adjacency_matrix(g);
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> shell(n, 0);
  std::size_t remaining = n;
  for (std::uint32_t k = 1; remaining > 0; ++k) {
    bool removed = true;
    while (removed) {
      removed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        std::size_t deg = 0;
        for (std::size_t w = 0; w < n; ++w) deg += (alive[w] && a[v][w]) ? 1 : 0;
        if (deg <= k) {
          alive[v] = false;
          shell[v] = k;
          --remaining;
          removed = true;
        }
      }
    }
  }
  return shell;
}

double modularity(const Graph& g, std::span<const std::uint32_t> assignment) {
  const std::size_t n = g.node_count();
  auto a = adjacency_matrix(g);
  double two_m = 0.0;
  std::vector<double> k(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j] ? 1.0 : 0.0;
  for (double x : k) two_m += x;
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (assignment[i] == assignment[j]) q += (a[i][j] ? 1.0 : 0.0) - k[i] * k[j] / two_m;
  return q / two_m;
}

std::pair<double, std::vector<std::uint32_t>> best_partition(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> current(n, 0), best;
  double best_q = -std::numeric_limits<double>::infinity();
  // Restricted growth strings enumerate each set partition once.
  std::function<void(std::size_t, std::uint32_t)> visit = [&](std::size_t i, std::uint32_t used) {
    if (i == n) {
      double q = modularity(g, current);
      if (q > best_q + 1e-12) {
        best_q = q;
        best = current;
      }
      return;
    }
    for (std::uint32_t c = 0; c <= used && c < n; ++c) {
      current[i] = c;
      visit(i + 1, std::max(used, c + 1));
    }
  };
  current[0] = 0;
  visit(1, 1);
  return {best_q, best};
}

namespace {

std::vector<std::vector<double>> path_counts(const Graph& g, const std::vector<std::vector<int>>& d) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> order;
    for (std::size_t t = 0; t < n; ++t)
      if (d[s][t] >= 0) order.push_back(t);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return d[s][x] < d[s][y]; });
    sigma[s][s] = 1.0;
    for (std::size_t t : order) {
      if (t == s) continue;
      for (node_t u : g.neighbors(static_cast<node_t>(t)))
        if (d[s][u] == d[s][t] - 1) sigma[s][t] += sigma[s][u];
    }
  }
  return sigma;
}

}  // namespace

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  auto d = floyd_warshall(g);
  auto sigma = path_counts(g, d);
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] < 0 || d[v][t] < 0) continue;
        if (d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return bc;
}

std::vector<double> closeness(const Graph& g) {
  const std::size_t n = g.node_count();
  auto d = floyd_warshall(g);
  std::vector<double> cc(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double r = 0.0, total = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (d[v][u] < 0) continue;
      r += 1.0;
      total += d[v][u];
    }
    if (total > 0.0) cc[v] = ((r - 1.0) / (n - 1.0)) * ((r - 1.0) / total);
  }
  return cc;
}

std::vector<double> enc(const Graph& g, std::span<const std::uint32_t> shells) {
  const std::size_t n = g.node_count();
  auto a = adjacency_matrix(g);
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) {
      if (!a[v][u]) continue;
      for (std::size_t w = 0; w < n; ++w)
        if (a[u][w]) out[v] += shells[w];
    }
  return out;
}

std::vector<double> cks(const Graph& g, const cksrank::CommunityPartition& p,
                        std::span<const std::uint32_t> community_shell, bool include_own) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (node_t v = 0; v < n; ++v) {
    for (std::uint32_t c = 0; c < p.community_count(); ++c) {
      if (!include_own && c == p.assignment[v]) continue;
      std::set<std::uint32_t> shells;
      for (node_t u : p.members[c]) shells.insert(community_shell[u]);
      double eta = 0.0;
      for (node_t u : p.members[c]) eta += g.has_edge(v, u) ? 1.0 : 0.0;
      if (eta == 0.0) continue;
      double entropy = 0.0;
      for (std::uint32_t s : shells) {
        double eta_s = 0.0;
        for (node_t u : p.members[c])
          if (community_shell[u] == s && g.has_edge(v, u)) eta_s += 1.0;
        if (eta_s == 0.0) continue;
        entropy -= s * (eta_s / eta) * std::log10(eta_s / eta);
      }
      out[v] += static_cast<double>(p.members[c].size()) * entropy * eta;
    }
  }
  return out;
}

double ic_expected_infected(const Graph& g, std::span<const node_t> seeds, double p) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.node_count();
  double expected = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double weight = 1.0;
    std::vector<std::vector<node_t>> live(n);
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        weight *= p;
        live[edges[e].first].push_back(edges[e].second);
        live[edges[e].second].push_back(edges[e].first);
      } else {
        weight *= 1.0 - p;
      }
    }
    if (weight == 0.0) continue;
    std::vector<bool> seen(n, false);
    std::vector<node_t> stack(seeds.begin(), seeds.end());
    for (node_t s : seeds) seen[s] = true;
    std::size_t count = seeds.size();
    while (!stack.empty()) {
      node_t x = stack.back();
      stack.pop_back();
      for (node_t y : live[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    expected += weight * static_cast<double>(count);
  }
  return expected;
}

double mean_clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  double total = 0.0;
  for (node_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    const double k = static_cast<double>(nb.size());
    if (nb.size() < 2) continue;
    double links = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) links += g.has_edge(nb[i], nb[j]) ? 1.0 : 0.0;
    total += 2.0 * links / (k * (k - 1.0));
  }
  return total / static_cast<double>(n);
}

}  // namespace oracle
