#ifndef TOTALB_GENERATORS_HPP
#define TOTALB_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "totalb/dense_paths.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Deterministic graph families used by the tests and the command line tool.
// All generators lay vertices out the same way: spine vertices first in path
// order, then pendant leaves grouped by their spine vertex; spine edges come
// before leaf edges.

// Path with n vertices (ids 0..n-1 in path order).
Graph make_path(int n);

// Star with the given number of spokes: centre 0, leaves 1..spokes.
Graph make_star(int spokes);

// Caterpillar with one entry per spine vertex giving its pendant leaf count.
Graph make_caterpillar(const std::vector<int>& leaves_per_spine);

// Caterpillar whose spine vertices all carry the same number of leaves.
Graph make_uniform_caterpillar(int spine, int leaves_each);

// Smallest caterpillar whose spine forms a single maximal dense path of the
// given type spanning k spine vertices, with exactly m_t dense elements:
//   One:   every spine vertex dense, m_t = 2k - 1 (k >= 3)
//   Two:   exactly the left boundary vertex dense, m_t = 2k - 2 (k >= 4)
//   Three: neither boundary vertex dense, m_t = 2k - 3 (k >= 5)
Graph make_minimal_dense_caterpillar(int k, DensePathType type);

// Caterpillar with total m-degree m whose optimum needs one colour fewer
// than m: a hub of degree m-2 reaches a second dense vertex across a
// degree-2 vertex.  Requires m >= 7 (the shape cannot exist at m = 6).
Graph make_pivoted_hub_caterpillar(int m);

// Nine-vertex caterpillar whose two dense paths share a boundary vertex;
// total m-degree 6, optimum 5.
Graph make_pivoted_shared_caterpillar();

// Ten-vertex caterpillar whose two dense paths are joined by an edge between
// their boundary vertices; total m-degree 6, optimum 5.
Graph make_pivoted_bridged_caterpillar();

// Random caterpillar with at most max_n vertices (spine length drawn from
// [2, max(2, max_n / 2)], then leaf counts drawn per spine vertex within the
// remaining budget).  The same seed always yields the same graph.
Graph make_random_caterpillar(std::uint64_t seed, int max_n);

// The cube graph: 3-regular, bipartite, connected, 8 vertices.
Graph make_cube();

}  // namespace totalb

#endif  // TOTALB_GENERATORS_HPP
