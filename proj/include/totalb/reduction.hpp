#ifndef TOTALB_REDUCTION_HPP
#define TOTALB_REDUCTION_HPP

#include <array>

#include "totalb/colouring.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Gadget graph H built around a connected cubic bipartite source graph G with
// n vertices.  H keeps G's vertex and edge ids unchanged, then adds a hub
// vertex adjacent to every vertex of G, four star centres adjacent to the
// hub, and n+3 pendant leaves under each star centre.  The result has
// 5n + 17 vertices and total m-degree n + 9, and it admits a total
// b-chromatic colouring with n + 9 colours exactly when G admits a proper
// total colouring with 4 colours.
struct ReductionGadget {
	Graph h;
	int source_vertex_count = 0;
	int source_edge_count = 0;
	int hub = -1;                // adjacent to all of G and to the star centres
	std::array<int, 4> stars{};  // centres of the four leaf stars

	// Pendant leaf j of star centre i, with i in 1..4 and j in 1..n+3.
	int leaf(int i, int j) const;
};

// Validates that the source graph is connected, bipartite and 3-regular,
// then builds the gadget.  Throws InputError otherwise.
ReductionGadget build_gadget(const Graph& source);

// Turns a proper total 4-colouring of the source graph into a total
// b-chromatic (n+9)-colouring of the gadget.  Throws InputError when the
// palette is not 4 and CertificateError when the given colouring is not a
// proper total colouring.
TotalColouring lift_colouring(const ReductionGadget& gadget, const Graph& source,
                              const TotalColouring& source_colouring);

// Restricts a total b-chromatic (n+9)-colouring of the gadget to the source
// graph and renames the surviving colours to 1..4.  Throws CertificateError
// when the input colouring is invalid, when the restriction does not use
// exactly four colours, or when the restriction is not proper.
TotalColouring project_colouring(const ReductionGadget& gadget, const Graph& source,
                                 const TotalColouring& gadget_colouring);

}  // namespace totalb

#endif  // TOTALB_REDUCTION_HPP
