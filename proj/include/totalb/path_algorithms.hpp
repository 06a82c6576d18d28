#ifndef TOTALB_PATH_ALGORITHMS_HPP
#define TOTALB_PATH_ALGORITHMS_HPP

#include <string>

#include "totalb/caterpillar.hpp"
#include "totalb/colouring.hpp"
#include "totalb/dense_paths.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Backbone colourings for a dense path P with k vertices and q dense
// elements.  Each routine colours the spine of P, one pendant (leaf vertex,
// leaf edge) pair per required slot, and nothing else, using colours 1..q;
// the caller's palette (colouring.k()) must therefore be at least q.
//
// Shared postconditions, asserted at runtime (violations raise
// InternalError):
//   * the q dense elements of P carry the colours 1..q bijectively;
//   * every dense element of P already sees all q - 1 other palette colours
//     among its assigned total neighbours (so each one is a witness when the
//     colouring is completed with the same palette);
//   * dense elements of total degree exactly q - 1 see no colour twice.
//
// Pendant demand: spine interiors of P need k - 3 pendant pairs, boundaries
// k - 2 (less for the variants below, which shrink the backbone).  A spine
// vertex with too few pendants raises StructuralError naming that vertex.

// Both boundary vertices dense: q = 2k - 1, requires k >= 3.
void colour_dense_path_type1(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring);

// Exactly one boundary vertex dense: q = 2k - 2, requires k >= 4.  Runs the
// type-1 backbone on the k - 1 vertices starting at the dense boundary, then
// introduces the remaining palette colour next to the non-dense boundary and
// spreads it so every dense element sees it.
void colour_dense_path_type2(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring);

// Neither boundary vertex dense: q = 2k - 3, requires k >= 5.  Runs the
// type-1 backbone on the k - 2 interior vertices and introduces the two
// remaining palette colours along both boundaries.
void colour_dense_path_type3(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring);

// The shared postcondition check (exposed for tests).
void assert_dense_path_postconditions(const Graph& graph, const DensePath& path,
                                      const TotalColouring& colouring, int q,
                                      const std::string& context);

}  // namespace totalb

#endif  // TOTALB_PATH_ALGORITHMS_HPP
