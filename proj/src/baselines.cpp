#include "cksrank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cksrank/cks.hpp"
#include "cksrank/errors.hpp"
#include "cksrank/kshell.hpp"

namespace cksrank {

std::vector<double> degree_scores(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (node_t v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
  return out;
}

namespace {

// Scratch for one single-source betweenness pass.
struct BrandesScratch {
  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<node_t> order;

  explicit BrandesScratch(std::size_t n) : dist(n), sigma(n) { order.reserve(n); }
};

// Fills `delta` with the dependency of source s on every node.
void single_source_dependency(const Graph& g, node_t s, BrandesScratch& scratch,
                              double* delta) {
  const std::size_t n = g.node_count();
  std::fill(scratch.dist.begin(), scratch.dist.end(), kUnreachable);
  std::fill(scratch.sigma.begin(), scratch.sigma.end(), 0.0);
  std::fill(delta, delta + n, 0.0);
  auto& order = scratch.order;
  order.clear();
  scratch.dist[s] = 0;
  scratch.sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    node_t v = order[head];
    for (node_t w : g.neighbors(v)) {
      if (scratch.dist[w] == kUnreachable) {
        scratch.dist[w] = scratch.dist[v] + 1;
        order.push_back(w);
      }
      if (scratch.dist[w] == scratch.dist[v] + 1) scratch.sigma[w] += scratch.sigma[v];
    }
  }
  for (std::size_t i = order.size(); i-- > 1;) {
    node_t w = order[i];
    const double coeff = (1.0 + delta[w]) / scratch.sigma[w];
    for (node_t v : g.neighbors(w)) {
      if (scratch.dist[v] + 1 == scratch.dist[w]) delta[v] += scratch.sigma[v] * coeff;
    }
  }
  delta[s] = 0.0;
}

constexpr std::size_t kBrandesBlock = 64;

double closeness_of(const Graph& g, node_t v, std::vector<node_t>& queue,
                    std::vector<std::uint32_t>& dist) {
  const std::size_t n = g.node_count();
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[v] = 0;
  queue.push_back(v);
  std::uint64_t total = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    node_t x = queue[head];
    total += dist[x];
    for (node_t y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (total == 0 || n < 2) return 0.0;
  const double reached_others = static_cast<double>(queue.size() - 1);
  return (reached_others / static_cast<double>(n - 1)) * (reached_others / static_cast<double>(total));
}

}  // namespace

std::vector<double> betweenness_scores_serial(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<double> delta(n);
  BrandesScratch scratch(n);
  for (node_t s = 0; s < n; ++s) {
    single_source_dependency(g, s, scratch, delta.data());
    for (std::size_t w = 0; w < n; ++w) bc[w] += delta[w];
  }
  for (auto& x : bc) x /= 2.0;
  return bc;
}

std::vector<double> betweenness_scores(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<double> deltas(kBrandesBlock * n);
  for (std::size_t block = 0; block < n; block += kBrandesBlock) {
    const auto width = static_cast<std::int64_t>(std::min(kBrandesBlock, n - block));
#pragma omp parallel
    {
      BrandesScratch scratch(n);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t b = 0; b < width; ++b) {
        single_source_dependency(g, static_cast<node_t>(block + static_cast<std::size_t>(b)), scratch,
                                 deltas.data() + static_cast<std::size_t>(b) * n);
      }
    }
    // Per node, add the block's dependencies in source order, as the serial
    // loop does.
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(n); ++w) {
      double acc = bc[w];
      for (std::int64_t b = 0; b < width; ++b) acc += deltas[static_cast<std::size_t>(b) * n + w];
      bc[w] = acc;
    }
  }
  for (auto& x : bc) x /= 2.0;
  return bc;
}

std::vector<double> closeness_scores_serial(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<node_t> queue;
  queue.reserve(n);
  std::vector<std::uint32_t> dist(n);
  for (node_t v = 0; v < n; ++v) out[v] = closeness_of(g, v, queue, dist);
  return out;
}

std::vector<double> closeness_scores(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
#pragma omp parallel
  {
    std::vector<node_t> queue;
    queue.reserve(n);
    std::vector<std::uint32_t> dist(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      out[v] = closeness_of(g, static_cast<node_t>(v), queue, dist);
    }
  }
  return out;
}

std::size_t common_neighbors(const Graph& g, node_t u, node_t v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<double> clustering_coefficients(const Graph& g) {
  std::vector<double> out(g.node_count(), 0.0);
  for (node_t v = 0; v < g.node_count(); ++v) {
    const std::size_t k = g.degree(v);
    if (k < 2) continue;
    std::size_t twice_triangles = 0;
    for (node_t w : g.neighbors(v)) twice_triangles += common_neighbors(g, v, w);
    out[v] = static_cast<double>(twice_triangles) / static_cast<double>(k * (k - 1));
  }
  return out;
}

std::vector<double> enc_scores(const Graph& g) {
  const auto shells = kshell_decomposition(g).shell;
  const std::size_t n = g.node_count();
  std::vector<double> neighborhood(n, 0.0);
  for (node_t v = 0; v < n; ++v) {
    for (node_t u : g.neighbors(v)) neighborhood[v] += static_cast<double>(shells[u]);
  }
  std::vector<double> out(n, 0.0);
  for (node_t v = 0; v < n; ++v) {
    for (node_t u : g.neighbors(v)) out[v] += neighborhood[u];
  }
  return out;
}

std::vector<double> dil_scores(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (node_t i = 0; i < n; ++i) {
    const auto ki = static_cast<double>(g.degree(i));
    double score = ki;
    for (node_t j : g.neighbors(i)) {
      const auto kj = static_cast<double>(g.degree(j));
      const auto tri = static_cast<double>(common_neighbors(g, i, j));
      const double importance = (ki - tri - 1.0) * (kj - tri - 1.0) / (tri / 2.0 + 1.0);
      const double denominator = ki + kj - 2.0;
      if (denominator > 0.0) score += importance * (ki - 1.0) / denominator;
    }
    out[i] = score;
  }
  return out;
}

std::vector<double> dcl_scores(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto clustering = clustering_coefficients(g);
  std::vector<double> out(n, 0.0);
  for (node_t i = 0; i < n; ++i) {
    double reach = 0.0;
    for (node_t j : g.neighbors(i)) {
      reach += static_cast<double>(g.degree(j)) - 1.0 -
               static_cast<double>(common_neighbors(g, i, j));
    }
    out[i] = static_cast<double>(g.degree(i)) + std::exp(-clustering[i]) * reach;
  }
  return out;
}

std::vector<double> lid_scores(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> regular(n, 0.0);
  std::vector<char> saturated(n, 0);
  const auto total = static_cast<double>(n);

#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(n);
    std::vector<node_t> queue;
    queue.reserve(n);
    std::vector<std::size_t> at_distance;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
      const auto v = static_cast<node_t>(vi);
      std::fill(dist.begin(), dist.end(), kUnreachable);
      queue.clear();
      at_distance.assign(1, 0);
      dist[v] = 0;
      queue.push_back(v);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        node_t x = queue[head];
        if (dist[x] >= at_distance.size()) at_distance.resize(dist[x] + 1, 0);
        ++at_distance[dist[x]];
        for (node_t y : g.neighbors(x)) {
          if (dist[y] == kUnreachable) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      const std::size_t eccentricity = at_distance.size() - 1;
      const std::size_t radius = std::max<std::size_t>(2, eccentricity / 2);

      double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
      std::size_t points = 0;
      std::size_t ball = 0;
      for (std::size_t l = 0; l <= radius; ++l) {
        if (l < at_distance.size()) ball += at_distance[l];
        if (l == 0) continue;
        const double share = static_cast<double>(ball) / total;
        if (share >= 1.0) continue;
        const double x = std::log(static_cast<double>(l));
        const double y = std::log(-share * std::log(share));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++points;
      }
      if (points < 2) {
        saturated[v] = 1;
        continue;
      }
      const double np = static_cast<double>(points);
      const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
      regular[v] = -slope;
    }
  }

  double top = 0.0;
  for (node_t v = 0; v < n; ++v) {
    if (!saturated[v]) top = std::max(top, regular[v]);
  }
  for (node_t v = 0; v < n; ++v) {
    if (saturated[v]) regular[v] = top + static_cast<double>(g.degree(v));
  }
  return regular;
}

GlrCore glr_core_nodes(const Graph& g, const CommunityPartition& p) {
  if (p.assignment.size() != g.node_count()) {
    throw ContractViolation("partition does not cover the graph's node set");
  }
  std::vector<std::size_t> neighbor_degree_sum(g.node_count(), 0);
  for (node_t v = 0; v < g.node_count(); ++v) {
    for (node_t w : g.neighbors(v)) neighbor_degree_sum[v] += g.degree(w);
  }
  // Lexicographic preference among candidates with the same primary count.
  auto prefer = [&](node_t a, node_t b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return neighbor_degree_sum[a] > neighbor_degree_sum[b];
  };
  GlrCore core;
  for (community_t c = 0; c < p.community_count(); ++c) {
    node_t critical = p.members[c].front();
    node_t gateway = critical;
    std::size_t best_inner = 0, best_outer = 0;
    bool first = true;
    for (node_t v : p.members[c]) {
      std::size_t inner = 0;
      for (node_t w : g.neighbors(v)) inner += (p.assignment[w] == c);
      const std::size_t outer = g.degree(v) - inner;
      // Members are ascending, so strict comparisons keep the lower index.
      if (first || inner > best_inner || (inner == best_inner && prefer(v, critical))) {
        critical = v;
        best_inner = inner;
      }
      if (outer > best_outer || (outer == best_outer && outer > 0 && prefer(v, gateway))) {
        gateway = v;
        best_outer = outer;
      }
      first = false;
    }
    core.critical.push_back(critical);
    if (best_outer > 0) core.gateway.push_back(gateway);
  }
  core.core = core.critical;
  core.core.insert(core.core.end(), core.gateway.begin(), core.gateway.end());
  std::sort(core.core.begin(), core.core.end());
  core.core.erase(std::unique(core.core.begin(), core.core.end()), core.core.end());
  return core;
}

std::vector<double> glr_scores(const Graph& g, const CommunityPartition& p) {
  const auto core = glr_core_nodes(g, p).core;
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::uint32_t>> dist(core.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(core.size()); ++i) {
    dist[i] = bfs_distances(g, core[i]);
  }
  std::vector<double> out(n, 0.0);
  for (const auto& row : dist) {
    for (std::size_t v = 0; v < n; ++v) {
      if (row[v] != kUnreachable) out[v] += 1.0 / (1.0 + static_cast<double>(row[v]));
    }
  }
  return out;
}

ScoreTable degree_centrality(const Graph& g) {
  return ScoreTable::from_scores(Method::DEG, degree_scores(g));
}
ScoreTable betweenness_centrality(const Graph& g) {
  return ScoreTable::from_scores(Method::BC, betweenness_scores(g));
}
ScoreTable closeness_centrality(const Graph& g) {
  return ScoreTable::from_scores(Method::CC, closeness_scores(g));
}
ScoreTable enc(const Graph& g) { return ScoreTable::from_scores(Method::ENC, enc_scores(g)); }
ScoreTable dil(const Graph& g) { return ScoreTable::from_scores(Method::DIL, dil_scores(g)); }
ScoreTable dcl(const Graph& g) { return ScoreTable::from_scores(Method::DCL, dcl_scores(g)); }
ScoreTable lid(const Graph& g) { return ScoreTable::from_scores(Method::LID, lid_scores(g)); }
ScoreTable glr(const Graph& g, const CommunityPartition& p) {
  return ScoreTable::from_scores(Method::GLR, glr_scores(g, p));
}

ScoreTable rank_nodes(Method method, const Graph& g, std::uint64_t seed) {
  switch (method) {
    case Method::CKS: return rank_by_cks(g, seed);
    case Method::ENC: return enc(g);
    case Method::GLR: return glr(g, louvain(g, seed));
    case Method::DCL: return dcl(g);
    case Method::LID: return lid(g);
    case Method::DIL: return dil(g);
    case Method::BC: return betweenness_centrality(g);
    case Method::CC: return closeness_centrality(g);
    case Method::DEG: return degree_centrality(g);
  }
  throw ParameterError("unknown ranking method");
}

}  // namespace cksrank
