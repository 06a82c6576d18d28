#ifndef TOTALB_GRAPH_HPP
#define TOTALB_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "totalb/elements.hpp"

namespace totalb {

// Simple undirected graph with stable integer ids.  Vertices are 0..n-1;
// edges are numbered by insertion order and keep that id for their lifetime,
// so an edge id is meaningful across serialisation round trips.
class Graph {
  public:
	Graph() = default;
	explicit Graph(int vertex_count);

	// Adds an undirected edge and returns its id.  Rejects self-loops,
	// duplicate edges and endpoints outside [0, n).
	int add_edge(int u, int v);

	int vertex_count() const { return static_cast<int>(adjacent_.size()); }
	int edge_count() const { return static_cast<int>(endpoints_.size()); }

	// Endpoints of an edge, as (smaller id, larger id).
	std::pair<int, int> endpoints(int edge_id) const;

	int degree(int v) const;
	int max_degree() const;
	const std::vector<int>& neighbours(int v) const;      // ascending vertex ids
	const std::vector<int>& incident_edges(int v) const;  // ascending edge ids
	std::optional<int> edge_between(int u, int v) const;

	bool is_connected() const;
	bool is_tree() const;
	std::vector<std::vector<int>> components() const;

	// --- element-level view used by total colourings -----------------------

	// All elements in canonical order: vertices ascending, then edges
	// ascending.
	std::vector<Element> elements() const;
	int element_count() const { return vertex_count() + edge_count(); }

	// Total degree: |N_t(x)|.  A vertex sees its neighbours and its incident
	// edges (2 deg(v)); an edge sees its two endpoints and every other edge
	// sharing an endpoint (deg(u) + deg(v)).
	int total_degree(const Element& x) const;

	// Total neighbourhood of x in canonical element order.
	std::vector<Element> total_neighbourhood(const Element& x) const;

	// Whether two distinct elements are adjacent in the total sense.
	bool total_adjacent(const Element& x, const Element& y) const;

	// The total graph: one vertex per element of this graph (vertex i keeps
	// id i, edge j becomes vertex n + j), with an edge between every pair of
	// totally adjacent elements.
	Graph total_graph() const;

  private:
	void check_vertex(int v) const;

	std::vector<std::pair<int, int>> endpoints_;
	std::vector<std::vector<int>> adjacent_;
	std::vector<std::vector<int>> incident_;
};

}  // namespace totalb

#endif  // TOTALB_GRAPH_HPP
