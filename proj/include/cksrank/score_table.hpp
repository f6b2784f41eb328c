#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "cksrank/graph.hpp"

namespace cksrank {

enum class Method { CKS, ENC, GLR, DCL, LID, DIL, BC, CC, DEG };

// The eight methods compared in the experiment protocol, CKS first.
inline constexpr std::array<Method, 8> kCompared = {Method::CKS, Method::ENC, Method::GLR,
                                                    Method::DCL, Method::LID, Method::DIL,
                                                    Method::BC,  Method::CC};

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name);

/// Node scores of one ranking method plus the total order they induce:
/// score descending, then dense index ascending.
struct ScoreTable {
  Method method = Method::CKS;
  std::vector<double> scores;
  std::vector<node_t> rank_order;

  /// Throws ContractViolation on any non-finite score.
  static ScoreTable from_scores(Method method, std::vector<double> scores);
};

/// CSV with header `node,score,rank`; rows in rank order, labels as node ids,
/// scores to 12 significant digits, ranks starting at 1.
void write_score_table_csv(std::ostream& out, const ScoreTable& table, const Graph& g);

}  // namespace cksrank
