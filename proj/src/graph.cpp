#include "cksrank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cksrank/community.hpp"
#include "cksrank/errors.hpp"

namespace cksrank {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw ParameterError("label count " + std::to_string(labels.size()) +
                         " does not match node count " + std::to_string(node_count));
  }
  Graph g;
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  g.index_.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    auto [it, inserted] = g.index_.emplace(g.labels_[i], static_cast<node_t>(i));
    if (!inserted) throw ParameterError("duplicate node label '" + g.labels_[i] + "'");
  }

  std::vector<std::size_t> degree(node_count, 0);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ParameterError("edge endpoint out of range");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  std::vector<node_t> raw(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  // Sort and deduplicate each list, then compact.
  std::vector<std::size_t> compact_offsets(node_count + 1, 0);
  std::size_t write = 0;
  for (std::size_t i = 0; i < node_count; ++i) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    for (auto it = first; it != unique_end; ++it) raw[write++] = *it;
    compact_offsets[i + 1] = write;
  }
  raw.resize(write);
  g.adjacency_ = std::move(raw);
  g.offsets_ = std::move(compact_offsets);
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<node_t>(v)));
  return best;
}

bool Graph::has_edge(node_t u, node_t v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<node_t> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (node_t u = 0; u < node_count(); ++u) {
    for (node_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in, bool directed_input) {
  // Orientation is discarded either way; the flag only documents the source.
  (void)directed_input;
  std::vector<std::string> labels;
  std::unordered_map<std::string, node_t> index;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<node_t>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ParseError("expected two whitespace-separated endpoint labels", line_no);
    }
    node_t u = intern(a);
    node_t v = intern(b);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw IoError("read failure while parsing edge list");
  if (labels.empty()) throw ParseError("edge list contains no edges", 0);
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph read_edge_list_file(const std::filesystem::path& path, bool directed_input) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path.string() + "'");
  try {
    return parse_edge_list(in, directed_input);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, node_t source) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<node_t> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    node_t v = queue[head];
    for (node_t w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

GraphSummary graph_summary(const Graph& g, std::string source_name,
                           const CommunityPartition* partition) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (partition != nullptr) s.communities = partition->community_count();
  s.source_name = std::move(source_name);
  return s;
}

}  // namespace cksrank
