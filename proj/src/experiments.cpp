#include "cksrank/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ostream>

#include <omp.h>

#include "cksrank/baselines.hpp"
#include "cksrank/errors.hpp"

namespace cksrank {

std::string_view x_axis_name(XAxis axis) noexcept {
  return axis == XAxis::spreader_fraction ? "spreader_fraction" : "activation_probability";
}

std::span<const double> fraction_grid_for(std::size_t n) noexcept {
  if (n >= kLargeGraphThreshold) return kLargeFractions;
  return kSmallFractions;
}

namespace {

void check_increasing(std::span<const double> xs, const char* what) {
  if (xs.empty()) throw ParameterError(std::string(what) + " grid is empty");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw ParameterError(std::string(what) + " grid must be strictly increasing");
  }
}

CurvePoint run_point(const Graph& g, std::span<const node_t> seeds, double x, double p_act,
                     std::size_t replicates, std::uint64_t master_seed) {
  auto summary = ic_monte_carlo(g, seeds, p_act, replicates, master_seed);
  return {x, summary.mean, summary.std, summary.replicates.size()};
}

}  // namespace

ExperimentCurve infected_vs_fraction(const Graph& g, const ScoreTable& ranking,
                                     const std::string& dataset,
                                     std::span<const double> fractions, double p_act,
                                     std::size_t replicates, std::uint64_t master_seed) {
  check_increasing(fractions, "fraction");
  ExperimentCurve curve{ranking.method, dataset, XAxis::spreader_fraction, {}};
  for (double f : fractions) {
    SeedSet seeds = select_seeds(ranking, f, g.node_count());
    curve.points.push_back(run_point(g, seeds.seeds, f, p_act, replicates, master_seed));
  }
  return curve;
}

ExperimentCurve infected_vs_fraction(const Graph& g, Method method, const std::string& dataset,
                                     std::span<const double> fractions, double p_act,
                                     std::size_t replicates, std::uint64_t master_seed) {
  return infected_vs_fraction(g, rank_nodes(method, g, master_seed), dataset, fractions, p_act,
                              replicates, master_seed);
}

ExperimentCurve infected_vs_probability(const Graph& g, const ScoreTable& ranking,
                                        const std::string& dataset,
                                        std::span<const double> probabilities, double fraction,
                                        std::size_t replicates, std::uint64_t master_seed) {
  check_increasing(probabilities, "probability");
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("activation probabilities must lie in [0, 1]");
  }
  SeedSet seeds = select_seeds(ranking, fraction, g.node_count());
  ExperimentCurve curve{ranking.method, dataset, XAxis::activation_probability, {}};
  for (double p : probabilities) {
    curve.points.push_back(run_point(g, seeds.seeds, p, p, replicates, master_seed));
  }
  return curve;
}

ExperimentCurve infected_vs_probability(const Graph& g, Method method,
                                        const std::string& dataset,
                                        std::span<const double> probabilities, double fraction,
                                        std::size_t replicates, std::uint64_t master_seed) {
  return infected_vs_probability(g, rank_nodes(method, g, master_seed), dataset, probabilities,
                                 fraction, replicates, master_seed);
}

SpreaderDistance average_spreader_distance(const Graph& g, std::span<const node_t> seeds) {
  if (seeds.size() < 2) throw ParameterError("average spreader distance needs at least two seeds");
  const auto k = static_cast<std::int64_t>(seeds.size());
  std::vector<std::uint64_t> row_sum(seeds.size(), 0);
  std::vector<std::size_t> row_finite(seeds.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < k; ++i) {
    const auto dist = bfs_distances(g, seeds[i]);
    for (std::int64_t j = i + 1; j < k; ++j) {
      const std::uint32_t d = dist[seeds[j]];
      if (d == kUnreachable) continue;
      row_sum[i] += d;
      ++row_finite[i];
    }
  }
  SpreaderDistance out;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    total += row_sum[i];
    out.finite_pairs += row_finite[i];
  }
  const std::size_t pairs = seeds.size() * (seeds.size() - 1) / 2;
  out.unreachable_pairs = pairs - out.finite_pairs;
  if (out.finite_pairs > 0) out.mean = static_cast<double>(total) / static_cast<double>(out.finite_pairs);
  return out;
}

TimingRecord time_ranking(Method method, const Graph& g, const std::string& dataset,
                          std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  (void)rank_nodes(method, g, seed);
  std::array<double, 3> runs{};
  for (auto& run : runs) {
    auto start = clock::now();
    auto table = rank_nodes(method, g, seed);
    auto stop = clock::now();
    if (table.rank_order.size() != g.node_count()) throw ContractViolation("ranking lost nodes");
    run = std::chrono::duration<double>(stop - start).count();
  }
  std::sort(runs.begin(), runs.end());
  TimingRecord record;
  record.method = method;
  record.dataset = dataset;
  // Never report a zero duration from a coarse clock.
  record.ranking_wall_time = std::max(runs[1], 1e-9);
  record.environment_note = "steady_clock, median of 3 after 1 warm-up, omp threads=" +
                            std::to_string(omp_get_max_threads());
  return record;
}

namespace {

std::string number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

}  // namespace

void write_curve_csv_header(std::ostream& out) {
  out << "method,dataset,x_name,x,mean,std,replicates\n";
}

void write_curve_csv_rows(std::ostream& out, const ExperimentCurve& curve) {
  for (const auto& p : curve.points) {
    out << method_name(curve.method) << ',' << curve.dataset << ',' << x_axis_name(curve.x_name)
        << ',' << number(p.x) << ',' << number(p.mean) << ',' << number(p.std) << ','
        << p.replicates << '\n';
  }
}

void write_timing_csv(std::ostream& out, std::span<const TimingRecord> records) {
  out << "method,dataset,seconds\n";
  for (const auto& r : records) {
    out << method_name(r.method) << ',' << r.dataset << ',' << number(r.ranking_wall_time) << '\n';
  }
}

}  // namespace cksrank
