#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cksrank/diffusion.hpp"
#include "cksrank/graph.hpp"
#include "cksrank/score_table.hpp"

namespace cksrank {

enum class XAxis { spreader_fraction, activation_probability };
std::string_view x_axis_name(XAxis axis) noexcept;

struct CurvePoint {
  double x = 0.0;
  double mean = 0.0;
  double std = 0.0;
  std::size_t replicates = 0;
};

struct ExperimentCurve {
  Method method = Method::CKS;
  std::string dataset;
  XAxis x_name = XAxis::spreader_fraction;
  std::vector<CurvePoint> points;  // x strictly increasing
};

// Sweep grids of the evaluation protocol.
inline constexpr double kSmallFractions[] = {0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1};
inline constexpr double kLargeFractions[] = {0.005, 0.01, 0.015, 0.02, 0.025, 0.03, 0.035, 0.04};
inline constexpr double kProbabilityGrid[] = {0.05, 0.075, 0.1,   0.125, 0.15,
                                              0.175, 0.2,  0.225, 0.25};
inline constexpr std::size_t kLargeGraphThreshold = 2000;
inline constexpr double kDefaultActivation = 0.1;
inline constexpr double kDefaultSweepFraction = 0.03;
inline constexpr std::size_t kDefaultReplicates = 100;

/// Small-graph grid for n < 2000, large-graph grid otherwise.
std::span<const double> fraction_grid_for(std::size_t n) noexcept;

/// Infected scale against spreader fraction for one precomputed ranking.
/// Every point reuses `master_seed`, so replicate r sees the same edge draws at
/// every fraction (common random numbers).
ExperimentCurve infected_vs_fraction(const Graph& g, const ScoreTable& ranking,
                                     const std::string& dataset,
                                     std::span<const double> fractions, double p_act,
                                     std::size_t replicates, std::uint64_t master_seed);
/// Same, running the ranking pass for `method` first.
ExperimentCurve infected_vs_fraction(const Graph& g, Method method, const std::string& dataset,
                                     std::span<const double> fractions, double p_act,
                                     std::size_t replicates, std::uint64_t master_seed);

/// Infected scale against activation probability for a fixed seed set.
ExperimentCurve infected_vs_probability(const Graph& g, const ScoreTable& ranking,
                                        const std::string& dataset,
                                        std::span<const double> probabilities, double fraction,
                                        std::size_t replicates, std::uint64_t master_seed);
ExperimentCurve infected_vs_probability(const Graph& g, Method method,
                                        const std::string& dataset,
                                        std::span<const double> probabilities, double fraction,
                                        std::size_t replicates, std::uint64_t master_seed);

struct SpreaderDistance {
  double mean = 0.0;              // over pairs with finite distance; 0 if none
  std::size_t finite_pairs = 0;
  std::size_t unreachable_pairs = 0;
};

/// Mean hop distance over unordered seed pairs. Throws ParameterError for
/// fewer than two seeds.
SpreaderDistance average_spreader_distance(const Graph& g, std::span<const node_t> seeds);

struct TimingRecord {
  Method method = Method::CKS;
  std::string dataset;
  double ranking_wall_time = 0.0;  // seconds
  std::string environment_note;
};

/// Wall time of a full ranking pass (Louvain included where used): one
/// discarded warm-up, then the median of three monotonic-clock runs.
TimingRecord time_ranking(Method method, const Graph& g, const std::string& dataset,
                          std::uint64_t seed);

/// `method,dataset,x_name,x,mean,std,replicates`
void write_curve_csv_header(std::ostream& out);
void write_curve_csv_rows(std::ostream& out, const ExperimentCurve& curve);
/// `method,dataset,seconds`
void write_timing_csv(std::ostream& out, std::span<const TimingRecord> records);

}  // namespace cksrank
