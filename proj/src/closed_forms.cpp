#include "totalb/closed_forms.hpp"

#include <string>
#include <vector>

#include "totalb/construct.hpp"
#include "totalb/errors.hpp"

namespace totalb {

namespace {

// Vertices of a path graph in walk order, starting at the degree-1 endpoint
// with the smaller id.
std::vector<int> path_order(const Graph& graph) {
	const int n = graph.vertex_count();
	if (n == 1) return {0};
	int start = -1;
	for (int v = 0; v < n; ++v) {
		if (graph.degree(v) == 1) {
			start = v;
			break;
		}
	}
	std::vector<int> order{start};
	int previous = -1;
	while (static_cast<int>(order.size()) < n) {
		const int current = order.back();
		for (int w : graph.neighbours(current)) {
			if (w != previous) {
				order.push_back(w);
				previous = current;
				break;
			}
		}
	}
	return order;
}

void require_path(const Graph& graph) {
	if (!graph.is_tree() || graph.max_degree() > 2) {
		throw InputError("colour_path requires a path graph");
	}
}

}  // namespace

TotalColouring colour_path(const Graph& graph) {
	require_path(graph);
	const int n = graph.vertex_count();
	const int k = (n == 1) ? 1 : (n <= 3) ? 3 : (n == 4) ? 4 : 5;
	TotalColouring colouring(graph, k);
	const auto order = path_order(graph);
	std::vector<int> walk_edges;  // walk_edges[i] joins order[i] and order[i+1]
	for (int i = 0; i + 1 < n; ++i) walk_edges.push_back(*graph.edge_between(order[i], order[i + 1]));

	const auto vertex = [&](int i) { return Element::vertex(order[i]); };
	const auto edge = [&](int i) { return Element::edge(walk_edges[i]); };
	const char* const context = "colour_path";

	if (n == 1) {
		colouring.set(vertex(0), 1);
	} else if (n == 2) {
		for (const auto& [element, colour] :
		     std::vector<std::pair<Element, int>>{{vertex(0), 1}, {edge(0), 2}, {vertex(1), 3}}) {
			assign_checked(graph, colouring, element, colour, context);
		}
	} else if (n == 3) {
		const int colours[] = {1, 2, 3, 1, 2};  // v, e, v, e, v along the walk
		for (int i = 0; i < 3; ++i) assign_checked(graph, colouring, vertex(i), colours[2 * i], context);
		for (int i = 0; i < 2; ++i) assign_checked(graph, colouring, edge(i), colours[2 * i + 1], context);
	} else if (n == 4) {
		const int colours[] = {1, 2, 3, 4, 1, 2, 4};
		for (int i = 0; i < 4; ++i) assign_checked(graph, colouring, vertex(i), colours[2 * i], context);
		for (int i = 0; i < 3; ++i) assign_checked(graph, colouring, edge(i), colours[2 * i + 1], context);
	} else {
		// A fixed head whose interior elements witness all five colours, then
		// a greedy tail that cannot disturb those witnesses.
		assign_checked(graph, colouring, vertex(1), 1, context);
		assign_checked(graph, colouring, edge(1), 2, context);
		assign_checked(graph, colouring, vertex(2), 3, context);
		assign_checked(graph, colouring, edge(2), 4, context);
		assign_checked(graph, colouring, vertex(3), 5, context);
		assign_checked(graph, colouring, vertex(0), 4, context);
		assign_checked(graph, colouring, edge(0), 5, context);
		assign_checked(graph, colouring, edge(3), 1, context);
		assign_checked(graph, colouring, vertex(4), 2, context);
		for (int i = 5; i < n; ++i) {
			greedy_assign(graph, colouring, edge(i - 1), context);
			greedy_assign(graph, colouring, vertex(i), context);
		}
	}
	expect_valid(graph, colouring, context);
	return colouring;
}

TotalColouring colour_star(const Graph& graph) {
	if (!graph.is_tree()) throw InputError("colour_star requires a star (a tree)");
	const int n = graph.vertex_count();
	if (n <= 2) return colour_path(graph);

	int centre = -1;
	for (int v = 0; v < n; ++v) {
		if (graph.degree(v) > 1) {
			if (centre != -1) throw InputError("colour_star requires a star: vertices " +
			                                   std::to_string(centre) + " and " + std::to_string(v) +
			                                   " both have degree > 1");
			centre = v;
		}
	}
	const auto& spokes = graph.neighbours(centre);  // ascending leaf ids
	const int spoke_count = static_cast<int>(spokes.size());
	TotalColouring colouring(graph, spoke_count + 1);
	const char* const context = "colour_star";

	assign_checked(graph, colouring, Element::vertex(centre), 1, context);
	for (int i = 0; i < spoke_count; ++i) {
		const int leaf = spokes[i];
		assign_checked(graph, colouring, Element::edge(*graph.edge_between(centre, leaf)), i + 2,
		               context);
	}
	for (int i = 0; i < spoke_count; ++i) {
		const int colour = (i + 1 < spoke_count) ? i + 3 : 2;
		assign_checked(graph, colouring, Element::vertex(spokes[i]), colour, context);
	}
	expect_valid(graph, colouring, context);
	return colouring;
}

}  // namespace totalb
