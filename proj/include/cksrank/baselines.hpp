#pragma once

#include <cstdint>
#include <vector>

#include "cksrank/community.hpp"
#include "cksrank/graph.hpp"
#include "cksrank/score_table.hpp"

namespace cksrank {

// Raw score vectors. Each is indexed by dense node id.

std::vector<double> degree_scores(const Graph& g);

/// Exact unweighted betweenness, each unordered pair counted once. Sources
/// are processed in fixed-size blocks whose dependencies are reduced in
/// source order, so the OpenMP path is bit-identical to the serial one.
std::vector<double> betweenness_scores(const Graph& g);
std::vector<double> betweenness_scores_serial(const Graph& g);

/// Component-scoped closeness with the (r-1)/(n-1) correction, r being the
/// number of nodes reachable from v including v. Isolated nodes score 0.
std::vector<double> closeness_scores(const Graph& g);
std::vector<double> closeness_scores_serial(const Graph& g);

/// Local clustering coefficient; 0 for degree < 2.
std::vector<double> clustering_coefficients(const Graph& g);

/// Triangles through edge (u, v), i.e. |N(u) ∩ N(v)|.
std::size_t common_neighbors(const Graph& g, node_t u, node_t v);

/// Extended neighborhood coreness: sum over neighbors of their neighborhood
/// coreness, itself the sum of the neighbors' global shells.
std::vector<double> enc_scores(const Graph& g);

/// Degree and importance of lines:
///   DIL(i) = k_i + sum_j I(e_ij) * (k_i - 1) / (k_i + k_j - 2)
///   I(e_ij) = (k_i - p - 1)(k_j - p - 1) / (p/2 + 1),  p = triangles on e_ij.
std::vector<double> dil_scores(const Graph& g);

/// Degree, clustering and neighbor relation:
///   DCL(i) = k_i + exp(-C_i) * sum_j (k_j - 1 - |N(i) ∩ N(j)|)
/// The sum counts the reach each neighbor adds beyond i's closed
/// neighborhood; a high clustering coefficient damps it.
std::vector<double> dcl_scores(const Graph& g);

/// Local information dimensionality. With n_i(l) the number of nodes within
/// l hops of i and p = n_i(l)/n, the box information is I(l) = -p ln p over
/// l = 1..max(2, floor(ecc_i / 2)); the score is minus the least-squares
/// slope of ln I(l) against ln l over the points with p < 1. A node whose
/// ball covers the graph before two usable points exist sits above every
/// regular score, ordered by degree.
std::vector<double> lid_scores(const Graph& g);

struct GlrCore {
  std::vector<node_t> critical;  // one per community: max intra-community degree
  std::vector<node_t> gateway;   // per community with outside edges: max external degree
  std::vector<node_t> core;      // sorted union of the two
};

/// Ties on either criterion go to the higher total degree, then the higher sum
/// of neighbor degrees, then the lower index.
GlrCore glr_core_nodes(const Graph& g, const CommunityPartition& p);

/// Gateway local rank: closeness to the core nodes,
///   GLR(v) = sum over reachable core nodes u of 1 / (1 + d(v, u)).
std::vector<double> glr_scores(const Graph& g, const CommunityPartition& p);

ScoreTable degree_centrality(const Graph& g);
ScoreTable betweenness_centrality(const Graph& g);
ScoreTable closeness_centrality(const Graph& g);
ScoreTable enc(const Graph& g);
ScoreTable dil(const Graph& g);
ScoreTable dcl(const Graph& g);
ScoreTable lid(const Graph& g);
ScoreTable glr(const Graph& g, const CommunityPartition& p);

/// Dispatches one full ranking pass. Community-based methods (CKS, GLR) run
/// Louvain with `seed` inside the pass.
ScoreTable rank_nodes(Method method, const Graph& g, std::uint64_t seed);

}  // namespace cksrank
