#include "doctest.h"

#include <sstream>

#include "cksrank/community.hpp"
#include "cksrank/errors.hpp"
#include "cksrank/generators.hpp"
#include "cksrank/graph.hpp"
#include "oracles.hpp"

using namespace cksrank;

namespace {

void check_symmetric_and_handshake(const Graph& g) {
  std::size_t degree_sum = 0;
  for (node_t v = 0; v < g.node_count(); ++v) {
    degree_sum += g.degree(v);
    for (node_t w : g.neighbors(v)) {
      REQUIRE(w != v);
      REQUIRE(g.has_edge(w, v));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("from_edges drops loops and duplicates and ignores orientation") {
  std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  Graph g = Graph::from_edges(3, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.label(2) == "2");
  check_symmetric_and_handshake(g);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 5}}), ParameterError);
}

TEST_CASE("parser: comments, blank lines, first-appearance indexing") {
  std::istringstream in("# header\n\n% other comment\nb a\na c\r\n  c b\nb a\n");
  Graph g = parse_edge_list(in);
  REQUIRE(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.label(0) == "b");
  CHECK(g.label(1) == "a");
  CHECK(g.label(2) == "c");
  CHECK(*g.index_of("c") == 2);
  CHECK_FALSE(g.index_of("zzz").has_value());
}

TEST_CASE("parser reports the failing line") {
  std::istringstream in("1 2\n2 3 4\n");
  try {
    parse_edge_list(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream single("1 2\nlonely\n");
  CHECK_THROWS_AS(parse_edge_list(single), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_edge_list(empty), ParseError);
}

TEST_CASE("directed input is symmetrized") {
  std::istringstream in("1 2\n2 1\n2 3\n");
  Graph g = parse_edge_list(in, true);
  CHECK(g.edge_count() == 2);
  check_symmetric_and_handshake(g);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("serialize then parse keeps labels and adjacency") {
  std::istringstream in("u7 x\nx q\nq u7\nq z\n");
  Graph g = parse_edge_list(in);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  Graph h = parse_edge_list(back);
  REQUIRE(h.node_count() == g.node_count());
  REQUIRE(h.edge_count() == g.edge_count());
  for (node_t v = 0; v < g.node_count(); ++v) {
    node_t hv = *h.index_of(g.label(v));
    for (node_t w : g.neighbors(v)) CHECK(h.has_edge(hv, *h.index_of(g.label(w))));
  }
  // Generated graphs use index labels, so the mapping is the identity.
  Graph ba = generate_ba(200, 3, 4);
  std::ostringstream ba_out;
  write_edge_list(ba_out, ba);
  std::istringstream ba_in(ba_out.str());
  Graph ba2 = parse_edge_list(ba_in);
  for (node_t v = 0; v < ba2.node_count(); ++v) {
    node_t orig = static_cast<node_t>(std::stoul(ba2.label(v)));
    CHECK(ba.degree(orig) == ba2.degree(v));
  }
  CHECK(ba2.edge_count() == ba.edge_count());
}

TEST_CASE("bfs_distances") {
  SUBCASE("path") {
    auto d = bfs_distances(oracle::path(3), 0);
    CHECK(d == std::vector<std::uint32_t>{0, 1, 2});
  }
  SUBCASE("two disjoint edges") {
    Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    auto d = bfs_distances(g, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(d[3] == kUnreachable);
  }
  SUBCASE("random graphs against Floyd-Warshall") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const std::size_t n = 10 + 5 * seed;
      Graph g = oracle::random_gnp(n, seed % 3 == 0 ? 0.03 : 0.08, seed);
      auto fw = oracle::floyd_warshall(g);
      for (node_t s = 0; s < n; ++s) {
        auto d = bfs_distances(g, s);
        for (node_t t = 0; t < n; ++t) {
          if (fw[s][t] < 0) {
            REQUIRE(d[t] == kUnreachable);
          } else {
            REQUIRE(d[t] == static_cast<std::uint32_t>(fw[s][t]));
          }
        }
      }
    }
  }
}

TEST_CASE("graph_summary") {
  Graph tri = oracle::clique(3);
  auto s = graph_summary(tri, "tri");
  CHECK(s.nodes == 3);
  CHECK(s.edges == 3);
  CHECK_FALSE(s.communities.has_value());

  Graph two = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto best = oracle::best_partition(two);
  std::vector<std::uint64_t> labels(best.second.begin(), best.second.end());
  auto oracle_partition = CommunityPartition::from_labels(labels);
  REQUIRE(oracle_partition.community_count() == 2);
  auto p = louvain(two, 3);
  auto s2 = graph_summary(two, "pair", &p);
  CHECK(s2.communities == std::optional<std::size_t>(2));
  CHECK(p.assignment == oracle_partition.assignment);
}

TEST_CASE("random graphs are symmetric") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) check_symmetric_and_handshake(oracle::random_gnp(60, 0.1, seed));
}
