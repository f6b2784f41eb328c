#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cksrank {

/// n problems (rows) by k algorithms (columns); higher values are better.
struct ResultMatrix {
  std::vector<std::string> problems;
  std::vector<std::string> algorithms;
  std::vector<double> values;  // row-major, n * k

  std::size_t rows() const noexcept { return problems.size(); }
  std::size_t cols() const noexcept { return algorithms.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }

  /// Throws ParameterError unless n >= 2, k >= 2, every cell present and finite.
  void validate() const;
};

/// CSV with header `problem,<alg1>,...,<algk>`. An empty cell is a ParseError.
ResultMatrix read_result_matrix_csv(std::istream& in);
void write_result_matrix_csv(std::ostream& out, const ResultMatrix& m);

/// Ranks of one row: 1 for the best (largest) value, ties share the mean of
/// the positions they occupy.
std::vector<double> row_ranks(std::span<const double> row);

/// Column means of the per-row ranks.
std::vector<double> friedman_ranks(const ResultMatrix& m);

/// F_f = 12n / (k(k+1)) * (sum R_j^2 - k(k+1)^2 / 4), with k = avg_ranks.size().
double friedman_statistic(std::span<const double> avg_ranks, std::size_t n);

/// F_id = (n-1) chi2 / (n(k-1) - chi2). Throws SingularStatistic when the
/// denominator vanishes (chi2 == n(k-1), a perfectly consistent ordering).
double iman_davenport(double chi2, std::size_t n, std::size_t k);

/// log P(Z > z) for a standard normal Z. Uses an asymptotic expansion in the
/// log domain for z > 8 so deep tails never underflow to zero.
double log_normal_upper_tail(double z);
double normal_upper_tail(double z);

struct ZComparison {
  std::size_t algorithm = 0;  // column index
  double z = 0.0;             // (R_control - R_i) / sqrt(k(k+1) / (6n))
  double p = 0.0;             // P(Z > |z|)
};

/// One comparison per non-control algorithm, in column order.
std::vector<ZComparison> control_z_and_p(std::span<const double> avg_ranks, std::size_t control,
                                         std::size_t n);

/// Holm step-down adjusted p-values for ascending p-values of the k-1
/// comparisons against a control:
///   APV_i = min(max_{j <= i} (k - j) p_j, 1).
/// Throws ContractViolation if `sorted_p` is not ascending or has the wrong size.
std::vector<double> holm_apv(std::span<const double> sorted_p, std::size_t k);

struct ControlComparison {
  std::string algorithm;
  double avg_rank = 0.0;
  double z = 0.0;
  double p_unadjusted = 0.0;
  double p_holm = 0.0;
  bool reject = false;  // p_holm < alpha
};

struct FriedmanReport {
  std::vector<std::string> algorithms;
  std::vector<double> avg_ranks;
  std::size_t problems = 0;
  double friedman_stat = 0.0;
  std::optional<double> iman_davenport;  // empty when singular
  std::string control;
  double alpha = 0.05;
  std::vector<ControlComparison> comparisons;  // ascending unadjusted p
};

FriedmanReport friedman_report(std::span<const double> avg_ranks,
                               const std::vector<std::string>& algorithms, std::size_t n,
                               const std::string& control, double alpha = 0.05);
FriedmanReport friedman_report(const ResultMatrix& m, const std::string& control,
                               double alpha = 0.05);

/// `algorithm,avg_rank` rows sorted by rank.
void write_rank_table_csv(std::ostream& out, const FriedmanReport& report);
/// `algorithm,z_score,p_unadjusted,p_holm,reject` rows by ascending p.
void write_holm_table_csv(std::ostream& out, const FriedmanReport& report);
/// Full-precision JSON rendering of the report.
std::string friedman_report_json(const FriedmanReport& report);

/// Reads `algorithm,avg_rank` rows.
std::pair<std::vector<std::string>, std::vector<double>> read_average_ranks_csv(std::istream& in);

}  // namespace cksrank
