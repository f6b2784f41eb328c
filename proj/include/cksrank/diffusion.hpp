#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cksrank/graph.hpp"
#include "cksrank/score_table.hpp"

namespace cksrank {

struct SeedSet {
  std::vector<node_t> seeds;  // ascending, distinct
  double fraction = 0.0;
  Method method = Method::CKS;
};

/// max(1, round-half-up(fraction * n)), capped at n.
std::size_t seed_count(double fraction, std::size_t n);

/// The top seed_count(fraction, n) nodes of `table.rank_order`.
/// Throws ParameterError unless 0 < fraction <= 1.
SeedSet select_seeds(const ScoreTable& table, double fraction, std::size_t n);

struct CascadeResult {
  std::size_t infected_count = 0;
  double infected_scale = 0.0;
  std::uint32_t rounds = 0;
  std::uint64_t replicate_seed = 0;
};

/// Outcome of the single activation attempt `from -> to` in the replicate
/// keyed by `replicate_seed`. A pure function of its arguments: the same
/// attempt always succeeds or fails together across seed sets and across
/// thresholds (success at p implies success at every p' > p).
bool activation_succeeds(std::uint64_t replicate_seed, node_t from, node_t to, double p_act);

// Called once per activation attempt (from, to) when supplied.
using AttemptObserver = std::function<void(node_t, node_t)>;

/// One synchronous-round independent cascade. Every node gets one attempt per
/// susceptible neighbor in the round after it activates; the cascade stops
/// after a round that activates nobody. If `infected_out` is given it
/// receives the final 0/1 state per node.
CascadeResult ic_single_run(const Graph& g, std::span<const node_t> seeds, double p_act,
                            std::uint64_t replicate_seed,
                            std::vector<std::uint8_t>* infected_out = nullptr,
                            const AttemptObserver* observer = nullptr);

/// Seed of replicate r under `master_seed`.
std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t r);

struct MonteCarloSummary {
  double mean = 0.0;  // of infected_scale
  double std = 0.0;   // sample standard deviation, 0 for one replicate
  std::vector<CascadeResult> replicates;
};

/// Replicates run in parallel; the summary is reduced in replicate order and
/// therefore identical to ic_monte_carlo_serial().
MonteCarloSummary ic_monte_carlo(const Graph& g, std::span<const node_t> seeds, double p_act,
                                 std::size_t replicates, std::uint64_t master_seed);
MonteCarloSummary ic_monte_carlo_serial(const Graph& g, std::span<const node_t> seeds,
                                        double p_act, std::size_t replicates,
                                        std::uint64_t master_seed);

}  // namespace cksrank
