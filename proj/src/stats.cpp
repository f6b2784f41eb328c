#include "cksrank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "cksrank/errors.hpp"

namespace cksrank {

void ResultMatrix::validate() const {
  if (rows() < 2) throw ParameterError("result matrix needs at least two problems");
  if (cols() < 2) throw ParameterError("result matrix needs at least two algorithms");
  if (values.size() != rows() * cols()) throw ParameterError("result matrix has missing cells");
  for (double v : values) {
    if (!std::isfinite(v)) throw ParameterError("result matrix has a non-finite cell");
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    auto first = field.find_first_not_of(" \t\r");
    auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_cell(const std::string& text, std::size_t line_no) {
  if (text.empty()) throw ParseError("missing cell", line_no);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("'" + text + "' is not a number", line_no);
  }
  if (used != text.size()) throw ParseError("'" + text + "' is not a number", line_no);
  return value;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string number(double x, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return buffer;
}

}  // namespace

ResultMatrix read_result_matrix_csv(std::istream& in) {
  ResultMatrix m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto fields = split_csv_line(line);
    if (m.algorithms.empty()) {
      if (fields.size() < 3) throw ParseError("header needs a problem column and >= 2 algorithms", line_no);
      m.algorithms.assign(fields.begin() + 1, fields.end());
      continue;
    }
    if (fields.size() != m.algorithms.size() + 1) {
      throw ParseError("expected " + std::to_string(m.algorithms.size() + 1) + " cells, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    m.problems.push_back(fields[0]);
    for (std::size_t j = 1; j < fields.size(); ++j) m.values.push_back(parse_cell(fields[j], line_no));
  }
  if (m.algorithms.empty()) throw ParseError("result matrix is empty", 0);
  m.validate();
  return m;
}

void write_result_matrix_csv(std::ostream& out, const ResultMatrix& m) {
  out << "problem";
  for (const auto& a : m.algorithms) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << m.problems[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << number(m.at(i, j), 17);
    out << '\n';
  }
}

std::vector<double> row_ranks(std::span<const double> row) {
  std::vector<std::size_t> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
  std::vector<double> ranks(row.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && row[order[j + 1]] == row[order[i]]) ++j;
    // Positions i..j (0-based) share the mean rank.
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

std::vector<double> friedman_ranks(const ResultMatrix& m) {
  m.validate();
  std::vector<double> avg(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = row_ranks(std::span<const double>(m.values).subspan(i * m.cols(), m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j) avg[j] += r[j];
  }
  for (auto& a : avg) a /= static_cast<double>(m.rows());
  return avg;
}

double friedman_statistic(std::span<const double> avg_ranks, std::size_t n) {
  const auto k = static_cast<double>(avg_ranks.size());
  double squares = 0.0;
  for (double r : avg_ranks) squares += r * r;
  return 12.0 * static_cast<double>(n) / (k * (k + 1.0)) * (squares - k * (k + 1.0) * (k + 1.0) / 4.0);
}

double iman_davenport(double chi2, std::size_t n, std::size_t k) {
  const double denominator = static_cast<double>(n) * static_cast<double>(k - 1) - chi2;
  if (std::abs(denominator) <= 1e-12 * std::max(1.0, std::abs(chi2))) {
    throw SingularStatistic("Iman-Davenport statistic is singular: chi2 equals n(k-1) = " +
                            number(static_cast<double>(n * (k - 1)), 12));
  }
  return static_cast<double>(n - 1) * chi2 / denominator;
}

double log_normal_upper_tail(double z) {
  if (z <= 8.0) return std::log(0.5 * std::erfc(z / std::numbers::sqrt2));
  // Q(z) = phi(z)/z * sum_k (-1)^k (2k-1)!! / z^(2k), truncated at its
  // smallest term.
  const double inv_z2 = 1.0 / (z * z);
  double term = 1.0;
  double series = 1.0;
  for (int k = 1; k < 200; ++k) {
    double next = -term * static_cast<double>(2 * k - 1) * inv_z2;
    if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18) {
      if (std::abs(next) < std::abs(term)) series += next;
      break;
    }
    term = next;
    series += term;
  }
  return -0.5 * z * z - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double normal_upper_tail(double z) { return std::exp(log_normal_upper_tail(z)); }

std::vector<ZComparison> control_z_and_p(std::span<const double> avg_ranks, std::size_t control,
                                         std::size_t n) {
  const std::size_t k = avg_ranks.size();
  if (control >= k) throw ParameterError("control algorithm index out of range");
  if (n == 0) throw ParameterError("number of problems must be positive");
  const double se = std::sqrt(static_cast<double>(k * (k + 1)) / (6.0 * static_cast<double>(n)));
  std::vector<ZComparison> out;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == control) continue;
    ZComparison c;
    c.algorithm = j;
    c.z = (avg_ranks[control] - avg_ranks[j]) / se;
    c.p = normal_upper_tail(std::abs(c.z));
    out.push_back(c);
  }
  return out;
}

std::vector<double> holm_apv(std::span<const double> sorted_p, std::size_t k) {
  if (k < 2 || sorted_p.size() != k - 1) {
    throw ContractViolation("Holm procedure expects k-1 = " + std::to_string(k - 1) + " p-values");
  }
  for (std::size_t i = 1; i < sorted_p.size(); ++i) {
    if (sorted_p[i] < sorted_p[i - 1]) throw ContractViolation("Holm procedure expects ascending p-values");
  }
  std::vector<double> apv(sorted_p.size());
  double running = 0.0;
  for (std::size_t i = 0; i < sorted_p.size(); ++i) {
    running = std::max(running, static_cast<double>(k - (i + 1)) * sorted_p[i]);
    apv[i] = std::min(running, 1.0);
  }
  return apv;
}

FriedmanReport friedman_report(std::span<const double> avg_ranks,
                               const std::vector<std::string>& algorithms, std::size_t n,
                               const std::string& control, double alpha) {
  const std::size_t k = avg_ranks.size();
  if (algorithms.size() != k) throw ParameterError("algorithm names and ranks differ in length");
  if (k < 2) throw ParameterError("need at least two algorithms");
  if (n < 2) throw ParameterError("need at least two problems");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  auto it = std::find(algorithms.begin(), algorithms.end(), control);
  if (it == algorithms.end()) throw ParameterError("control algorithm '" + control + "' not present");
  const auto control_index = static_cast<std::size_t>(it - algorithms.begin());

  FriedmanReport report;
  report.algorithms = algorithms;
  report.avg_ranks.assign(avg_ranks.begin(), avg_ranks.end());
  report.problems = n;
  report.control = control;
  report.alpha = alpha;
  report.friedman_stat = friedman_statistic(avg_ranks, n);
  try {
    report.iman_davenport = iman_davenport(report.friedman_stat, n, k);
  } catch (const SingularStatistic&) {
    report.iman_davenport.reset();
  }

  auto comparisons = control_z_and_p(avg_ranks, control_index, n);
  std::stable_sort(comparisons.begin(), comparisons.end(),
                   [](const ZComparison& a, const ZComparison& b) { return a.p < b.p; });
  std::vector<double> sorted_p;
  for (const auto& c : comparisons) sorted_p.push_back(c.p);
  auto apv = holm_apv(sorted_p, k);
  for (std::size_t i = 0; i < comparisons.size(); ++i) {
    ControlComparison row;
    row.algorithm = algorithms[comparisons[i].algorithm];
    row.avg_rank = avg_ranks[comparisons[i].algorithm];
    row.z = comparisons[i].z;
    row.p_unadjusted = comparisons[i].p;
    row.p_holm = apv[i];
    row.reject = apv[i] < alpha;
    report.comparisons.push_back(row);
  }
  return report;
}

FriedmanReport friedman_report(const ResultMatrix& m, const std::string& control, double alpha) {
  auto ranks = friedman_ranks(m);
  return friedman_report(ranks, m.algorithms, m.rows(), control, alpha);
}

void write_rank_table_csv(std::ostream& out, const FriedmanReport& report) {
  std::vector<std::size_t> order(report.algorithms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.avg_ranks[a] < report.avg_ranks[b];
  });
  out << "algorithm,avg_rank\n";
  for (std::size_t j : order) out << report.algorithms[j] << ',' << number(report.avg_ranks[j], 6) << '\n';
}

void write_holm_table_csv(std::ostream& out, const FriedmanReport& report) {
  out << "algorithm,z_score,p_unadjusted,p_holm,reject\n";
  for (const auto& c : report.comparisons) {
    out << c.algorithm << ',' << number(c.z, 6) << ',' << number(c.p_unadjusted, 6) << ','
        << number(c.p_holm, 6) << ',' << (c.reject ? "true" : "false") << '\n';
  }
}

std::string friedman_report_json(const FriedmanReport& report) {
  nlohmann::ordered_json j;
  j["problems"] = report.problems;
  j["algorithms"] = report.algorithms;
  j["avg_ranks"] = report.avg_ranks;
  j["friedman_statistic"] = report.friedman_stat;
  j["friedman_df"] = report.algorithms.size() - 1;
  if (report.iman_davenport) {
    j["iman_davenport"] = *report.iman_davenport;
  } else {
    j["iman_davenport"] = nullptr;
    j["iman_davenport_singular"] = true;
  }
  j["iman_davenport_df"] = {report.algorithms.size() - 1,
                            (report.problems - 1) * (report.algorithms.size() - 1)};
  j["control"] = report.control;
  j["alpha"] = report.alpha;
  auto& rows = j["comparisons"] = nlohmann::ordered_json::array();
  for (const auto& c : report.comparisons) {
    rows.push_back({{"algorithm", c.algorithm},
                    {"avg_rank", c.avg_rank},
                    {"z", c.z},
                    {"p_unadjusted", c.p_unadjusted},
                    {"p_holm", c.p_holm},
                    {"reject", c.reject}});
  }
  return j.dump(2);
}

std::pair<std::vector<std::string>, std::vector<double>> read_average_ranks_csv(std::istream& in) {
  std::vector<std::string> names;
  std::vector<double> ranks;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto fields = split_csv_line(line);
    if (header) {
      header = false;
      if (fields.size() != 2) throw ParseError("expected header 'algorithm,avg_rank'", line_no);
      continue;
    }
    if (fields.size() != 2) throw ParseError("expected 'algorithm,avg_rank'", line_no);
    names.push_back(fields[0]);
    ranks.push_back(parse_cell(fields[1], line_no));
  }
  if (names.size() < 2) throw ParseError("need at least two algorithms", 0);
  return {names, ranks};
}

}  // namespace cksrank
