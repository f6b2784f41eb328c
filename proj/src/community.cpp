#include "cksrank/community.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cksrank/errors.hpp"
#include "cksrank/rng.hpp"

namespace cksrank {

CommunityPartition CommunityPartition::from_labels(std::span<const std::uint64_t> labels) {
  CommunityPartition p;
  p.assignment.resize(labels.size());
  std::unordered_map<std::uint64_t, community_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] =
        renumber.emplace(labels[v], static_cast<community_t>(p.members.size()));
    if (inserted) p.members.emplace_back();
    p.assignment[v] = it->second;
    p.members[it->second].push_back(static_cast<node_t>(v));
  }
  return p;
}

CommunityPartition CommunityPartition::singletons(std::size_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

CommunityPartition CommunityPartition::whole(std::size_t n) {
  std::vector<std::uint64_t> labels(n, 0);
  return from_labels(labels);
}

double modularity(const Graph& g, const CommunityPartition& p) {
  if (p.assignment.size() != g.node_count()) {
    throw ContractViolation("partition does not cover the graph's node set");
  }
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0) throw ParameterError("modularity is undefined for a graph with no edges");
  std::vector<double> internal(p.community_count(), 0.0);
  std::vector<double> degree_sum(p.community_count(), 0.0);
  for (node_t u = 0; u < g.node_count(); ++u) {
    community_t cu = p.assignment[u];
    degree_sum[cu] += static_cast<double>(g.degree(u));
    for (node_t v : g.neighbors(u)) {
      if (u < v && p.assignment[v] == cu) internal[cu] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    double share = degree_sum[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

namespace {

// Level graph for Louvain. Self-loop weight is kept out of the adjacency.
struct WeightedGraph {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> self_weight;  // internal edge weight, each edge once
  std::vector<double> strength;     // incident weight, self-loops twice
  double total = 0.0;               // sum of strength == 2m

  std::size_t size() const { return strength.size(); }
};

WeightedGraph from_graph(const Graph& g) {
  WeightedGraph wg;
  const std::size_t n = g.node_count();
  wg.offsets.resize(n + 1, 0);
  wg.self_weight.assign(n, 0.0);
  wg.strength.assign(n, 0.0);
  for (node_t v = 0; v < n; ++v) {
    for (node_t w : g.neighbors(v)) {
      wg.targets.push_back(w);
      wg.weights.push_back(1.0);
    }
    wg.offsets[v + 1] = wg.targets.size();
    wg.strength[v] = static_cast<double>(g.degree(v));
  }
  wg.total = static_cast<double>(2 * g.edge_count());
  return wg;
}

// One local-moving phase. Returns true when at least one node changed
// community. `comm` must start as the identity.
bool local_moving(const WeightedGraph& wg, std::vector<std::uint32_t>& comm,
                  std::span<const std::uint32_t> order, double min_gain) {
  const std::size_t n = wg.size();
  const double m = wg.total / 2.0;
  std::vector<double> tot(wg.strength);
  std::vector<double> link_weight(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;

  std::size_t moves;
  do {
    moves = 0;
    for (std::uint32_t i : order) {
      const std::uint32_t current = comm[i];
      const double ki = wg.strength[i];
      touched.clear();
      for (std::size_t e = wg.offsets[i]; e < wg.offsets[i + 1]; ++e) {
        std::uint32_t c = comm[wg.targets[e]];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link_weight[c] += wg.weights[e];
      }

      tot[current] -= ki;
      const double stay = link_weight[current] - tot[current] * ki / wg.total;
      std::uint32_t best = current;
      double best_gain = stay;
      std::sort(touched.begin(), touched.end());
      for (std::uint32_t c : touched) {
        if (c == current) continue;
        double gain = link_weight[c] - tot[c] * ki / wg.total;
        // Strict comparisons: ties keep the current community, and among
        // equal improving gains the lowest id (visited first) wins.
        if ((gain - stay) / m > min_gain && (best == current || gain > best_gain)) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += ki;
      if (best != current) {
        comm[i] = best;
        ++moves;
      }

      for (std::uint32_t c : touched) {
        seen[c] = 0;
        link_weight[c] = 0.0;
      }
    }
    any_move = any_move || moves > 0;
  } while (moves > 0);
  return any_move;
}

// Renumbers `comm` densely by first appearance and returns the count.
std::uint32_t renumber(std::vector<std::uint32_t>& comm) {
  std::vector<std::uint32_t> remap(comm.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& c : comm) {
    if (remap[c] == UINT32_MAX) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

WeightedGraph aggregate(const WeightedGraph& wg, const std::vector<std::uint32_t>& comm,
                        std::uint32_t count) {
  std::vector<std::vector<std::uint32_t>> members(count);
  for (std::uint32_t i = 0; i < wg.size(); ++i) members[comm[i]].push_back(i);

  WeightedGraph out;
  out.offsets.assign(count + 1, 0);
  out.self_weight.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  out.total = wg.total;

  std::vector<double> link_weight(count, 0.0);
  std::vector<char> seen(count, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < count; ++c) {
    double internal_twice = 0.0;
    touched.clear();
    for (std::uint32_t i : members[c]) {
      out.self_weight[c] += wg.self_weight[i];
      out.strength[c] += wg.strength[i];
      for (std::size_t e = wg.offsets[i]; e < wg.offsets[i + 1]; ++e) {
        std::uint32_t d = comm[wg.targets[e]];
        if (d == c) {
          internal_twice += wg.weights[e];
        } else {
          if (!seen[d]) {
            seen[d] = 1;
            touched.push_back(d);
          }
          link_weight[d] += wg.weights[e];
        }
      }
    }
    out.self_weight[c] += internal_twice / 2.0;
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t d : touched) {
      out.targets.push_back(d);
      out.weights.push_back(link_weight[d]);
      seen[d] = 0;
      link_weight[d] = 0.0;
    }
    out.offsets[c + 1] = out.targets.size();
  }
  return out;
}

}  // namespace

LouvainResult louvain_with_trace(const Graph& g, const LouvainOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ParameterError("louvain requires at least one node");
  LouvainResult result;
  std::vector<std::uint64_t> node_comm(n);
  std::iota(node_comm.begin(), node_comm.end(), 0);
  if (g.edge_count() == 0) {
    result.partition = CommunityPartition::from_labels(node_comm);
    return result;
  }

  Rng rng(options.seed);
  WeightedGraph level = from_graph(g);
  result.level_modularity.push_back(modularity(g, CommunityPartition::from_labels(node_comm)));

  while (true) {
    std::vector<std::uint32_t> order(level.size());
    std::iota(order.begin(), order.end(), 0u);
    rng.shuffle(order.begin(), order.end());

    std::vector<std::uint32_t> comm(level.size());
    std::iota(comm.begin(), comm.end(), 0u);
    if (!local_moving(level, comm, order, options.min_gain)) break;

    std::uint32_t count = renumber(comm);
    for (auto& c : node_comm) c = comm[c];
    double q = modularity(g, CommunityPartition::from_labels(node_comm));
    double previous = result.level_modularity.back();
    result.level_modularity.push_back(q);
    if (q - previous <= options.min_gain || count == level.size()) break;
    level = aggregate(level, comm, count);
  }

  result.partition = CommunityPartition::from_labels(node_comm);
  return result;
}

CommunityPartition louvain(const Graph& g, std::uint64_t seed) {
  LouvainOptions options;
  options.seed = seed;
  return louvain_with_trace(g, options).partition;
}

}  // namespace cksrank
