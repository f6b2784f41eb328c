#pragma once

#include <cstddef>
#include <cstdint>

#include "cksrank/graph.hpp"

namespace cksrank {

/// Barabási–Albert preferential attachment.
///
/// Growth starts from a star on `m_attach + 1` nodes (node 0 at the center);
/// each later node links to `m_attach` distinct existing nodes chosen with
/// probability proportional to degree. Yields m_attach * (n - m_attach) edges.
Graph generate_ba(std::size_t n, std::size_t m_attach, std::uint64_t seed);

/// Holme–Kim power-law cluster growth on the same star seed.
///
/// The first link of each new node is preferential; every later link is, with
/// probability `p_tri`, a triangle-closing link to a random neighbor of the
/// most recent preferential target, and otherwise another preferential link.
/// With p_tri == 0 no coin is drawn, so the output equals generate_ba().
Graph generate_powerlaw_cluster(std::size_t n, std::size_t m_attach, double p_tri,
                                std::uint64_t seed);

}  // namespace cksrank
