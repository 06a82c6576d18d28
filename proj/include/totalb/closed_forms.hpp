#ifndef TOTALB_CLOSED_FORMS_HPP
#define TOTALB_CLOSED_FORMS_HPP

#include "totalb/colouring.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Optimal total b-chromatic colouring of a path graph (any vertex ids).  The
// number of colours equals the total m-degree: 1, 3, 3, 4 for 1..4 vertices
// and 5 from five vertices on.  Errors if the graph is not a path.
TotalColouring colour_path(const Graph& graph);

// Optimal total b-chromatic colouring of a star K_{1,n} with n + 1 colours
// (centre colour 1, spoke i colour i + 1).  A two-vertex star is handled as
// the path on two vertices, which needs three colours.  Errors if the graph
// is not a star.
TotalColouring colour_star(const Graph& graph);

}  // namespace totalb

#endif  // TOTALB_CLOSED_FORMS_HPP
