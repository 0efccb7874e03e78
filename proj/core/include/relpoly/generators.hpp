#pragma once

#include <cstddef>
#include <span>

#include "relpoly/graph.hpp"
#include "relpoly/rng.hpp"

namespace relpoly {

/// Erdős–Rényi G(N, p_l); pairs are visited in lexicographic order and each
/// consumes exactly one uniform draw.
Graph generate_er(std::size_t node_count, double link_probability, RngSeed seed);

/// Random geometric graph on the unit square (no wraparound); u and v are
/// linked iff their Euclidean distance is strictly below `radius`.
Graph generate_rgg(std::size_t node_count, double radius, RngSeed seed);

/// Barabási–Albert preferential attachment. Starts from a clique on
/// `links_per_node` nodes; each newcomer attaches to that many distinct
/// existing nodes drawn proportionally to degree (redrawing duplicates).
Graph generate_ba(std::size_t node_count, std::size_t links_per_node, RngSeed seed);

/// 2D or 3D grid with nearest-neighbour links and no wraparound.
Graph generate_lattice(std::span<const std::size_t> dims);

}  // namespace relpoly
