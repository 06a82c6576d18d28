#ifndef TOTALB_MDEGREE_HPP
#define TOTALB_MDEGREE_HPP

#include <vector>

#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Total m-degree: with the elements sorted by total degree descending as
// x_1, x_2, ..., the largest index i such that d_t(x_i) >= i - 1.  This is an
// upper bound for the maximum k admitting a total b-chromatic k-colouring.
// Errors on a graph with no elements.
int total_m_degree(const Graph& graph);

// An element is dense when d_t(x) >= m - 1 (with m the total m-degree), and
// tight when d_t(x) == m - 1.  There are always at least m dense elements.
bool is_dense(const Graph& graph, int m, const Element& x);
bool is_tight(const Graph& graph, int m, const Element& x);

// All dense elements in canonical element order.
std::vector<Element> dense_elements(const Graph& graph);

}  // namespace totalb

#endif  // TOTALB_MDEGREE_HPP
