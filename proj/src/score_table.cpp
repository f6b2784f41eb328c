#include "cksrank/score_table.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "cksrank/errors.hpp"

namespace cksrank {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::CKS: return "CKS";
    case Method::ENC: return "ENC";
    case Method::GLR: return "GLR";
    case Method::DCL: return "DCL";
    case Method::LID: return "LID";
    case Method::DIL: return "DIL";
    case Method::BC: return "BC";
    case Method::CC: return "CC";
    case Method::DEG: return "DEG";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Method m : {Method::CKS, Method::ENC, Method::GLR, Method::DCL, Method::LID, Method::DIL,
                   Method::BC, Method::CC, Method::DEG}) {
    if (method_name(m) == upper) return m;
  }
  return std::nullopt;
}

ScoreTable ScoreTable::from_scores(Method method, std::vector<double> scores) {
  for (std::size_t v = 0; v < scores.size(); ++v) {
    if (!std::isfinite(scores[v])) {
      throw ContractViolation(std::string(method_name(method)) + " produced a non-finite score at node " +
                              std::to_string(v));
    }
  }
  ScoreTable t;
  t.method = method;
  t.rank_order.resize(scores.size());
  std::iota(t.rank_order.begin(), t.rank_order.end(), node_t{0});
  std::sort(t.rank_order.begin(), t.rank_order.end(), [&](node_t a, node_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  t.scores = std::move(scores);
  return t;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

void write_score_table_csv(std::ostream& out, const ScoreTable& table, const Graph& g) {
  out << "node,score,rank\n";
  char buffer[64];
  std::size_t rank = 1;
  for (node_t v : table.rank_order) {
    std::snprintf(buffer, sizeof buffer, "%.12g", table.scores[v]);
    out << csv_field(g.label(v)) << ',' << buffer << ',' << rank++ << '\n';
  }
}

}  // namespace cksrank
