#include "cksrank/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "cksrank/errors.hpp"
#include "cksrank/rng.hpp"

namespace cksrank {

std::size_t seed_count(double fraction, std::size_t n) {
  const auto rounded = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5));
  return std::min(n, std::max<std::size_t>(1, rounded));
}

SeedSet select_seeds(const ScoreTable& table, double fraction, std::size_t n) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ParameterError("spreader fraction must lie in (0, 1]");
  }
  if (table.rank_order.size() != n) {
    throw ContractViolation("score table does not cover the graph's node set");
  }
  SeedSet s;
  s.fraction = fraction;
  s.method = table.method;
  const std::size_t k = seed_count(fraction, n);
  s.seeds.assign(table.rank_order.begin(), table.rank_order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(s.seeds.begin(), s.seeds.end());
  return s;
}

bool activation_succeeds(std::uint64_t replicate_seed, node_t from, node_t to, double p_act) {
  const std::uint64_t key = (static_cast<std::uint64_t>(from) << 32) | to;
  return to_unit(mix64(replicate_seed ^ mix64(key))) < p_act;
}

CascadeResult ic_single_run(const Graph& g, std::span<const node_t> seeds, double p_act,
                            std::uint64_t replicate_seed, std::vector<std::uint8_t>* infected_out,
                            const AttemptObserver* observer) {
  if (!(p_act >= 0.0 && p_act <= 1.0)) throw ParameterError("activation probability must lie in [0, 1]");
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> local;
  std::vector<std::uint8_t>& infected = infected_out != nullptr ? *infected_out : local;
  infected.assign(n, 0);

  std::vector<node_t> frontier;
  std::vector<node_t> next;
  for (node_t s : seeds) {
    if (s >= n) throw ParameterError("seed index out of range");
    if (!infected[s]) {
      infected[s] = 1;
      frontier.push_back(s);
    }
  }

  CascadeResult result;
  result.replicate_seed = replicate_seed;
  std::size_t count = frontier.size();
  while (!frontier.empty()) {
    next.clear();
    for (node_t u : frontier) {
      for (node_t v : g.neighbors(u)) {
        if (infected[v]) continue;
        if (observer != nullptr) (*observer)(u, v);
        if (activation_succeeds(replicate_seed, u, v, p_act)) {
          infected[v] = 1;
          next.push_back(v);
        }
      }
    }
    if (next.empty()) break;
    ++result.rounds;
    count += next.size();
    frontier.swap(next);
  }
  result.infected_count = count;
  result.infected_scale = n == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(n);
  return result;
}

std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t r) {
  return derive_seed(master_seed, r);
}

namespace {

// Works on integer counts, so the sum is exact and a constant outcome has a
// standard deviation of exactly zero.
void summarize(MonteCarloSummary& summary, std::size_t n) {
  const auto count = static_cast<double>(summary.replicates.size());
  double sum = 0.0;
  for (const auto& r : summary.replicates) sum += static_cast<double>(r.infected_count);
  const double mean_count = sum / count;
  summary.mean = mean_count / static_cast<double>(n);
  double squares = 0.0;
  for (const auto& r : summary.replicates) {
    const double d = static_cast<double>(r.infected_count) - mean_count;
    squares += d * d;
  }
  squares /= static_cast<double>(n) * static_cast<double>(n);
  summary.std = summary.replicates.size() > 1 ? std::sqrt(squares / (count - 1.0)) : 0.0;
}

void check_replicates(std::size_t replicates) {
  if (replicates < 1) throw ParameterError("replicates must be >= 1");
}

}  // namespace

MonteCarloSummary ic_monte_carlo(const Graph& g, std::span<const node_t> seeds, double p_act,
                                 std::size_t replicates, std::uint64_t master_seed) {
  check_replicates(replicates);
  MonteCarloSummary summary;
  summary.replicates.resize(replicates);
#pragma omp parallel
  {
    std::vector<std::uint8_t> infected;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(replicates); ++r) {
      summary.replicates[r] = ic_single_run(g, seeds, p_act,
                                            replicate_seed(master_seed, static_cast<std::uint64_t>(r)),
                                            &infected);
    }
  }
  summarize(summary, g.node_count());
  return summary;
}

MonteCarloSummary ic_monte_carlo_serial(const Graph& g, std::span<const node_t> seeds,
                                        double p_act, std::size_t replicates,
                                        std::uint64_t master_seed) {
  check_replicates(replicates);
  MonteCarloSummary summary;
  summary.replicates.reserve(replicates);
  std::vector<std::uint8_t> infected;
  for (std::uint64_t r = 0; r < replicates; ++r) {
    summary.replicates.push_back(
        ic_single_run(g, seeds, p_act, replicate_seed(master_seed, r), &infected));
  }
  summarize(summary, g.node_count());
  return summary;
}

}  // namespace cksrank
