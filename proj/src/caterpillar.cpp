#include "totalb/caterpillar.hpp"

#include <algorithm>

#include "totalb/errors.hpp"

namespace totalb {

int CaterpillarDecomposition::spine_index(int vertex) const {
	const auto it = std::find(spine.begin(), spine.end(), vertex);
	return it == spine.end() ? -1 : static_cast<int>(it - spine.begin());
}

DecomposeOutcome decompose_caterpillar(const Graph& graph) {
	if (graph.vertex_count() == 0) {
		return NotCaterpillar{NotCaterpillar::Reason::NotTree, "graph has no vertices"};
	}
	if (!graph.is_connected()) {
		return NotCaterpillar{NotCaterpillar::Reason::NotTree, "graph is disconnected"};
	}
	if (graph.edge_count() != graph.vertex_count() - 1) {
		return NotCaterpillar{NotCaterpillar::Reason::NotTree, "graph contains a cycle"};
	}

	CaterpillarDecomposition result;
	if (graph.vertex_count() <= 2) return result;  // no vertex of degree >= 2

	// The spine candidates are the vertices of degree >= 2; in a caterpillar
	// they induce a path, i.e. every such vertex has at most two neighbours
	// of degree >= 2.
	const auto inner = [&graph](int v) { return graph.degree(v) >= 2; };
	std::vector<int> ends;  // inner vertices with <= 1 inner neighbour
	for (int v = 0; v < graph.vertex_count(); ++v) {
		if (!inner(v)) continue;
		int inner_neighbours = 0;
		for (int w : graph.neighbours(v)) {
			if (inner(w)) ++inner_neighbours;
		}
		if (inner_neighbours > 2) {
			return NotCaterpillar{NotCaterpillar::Reason::SpineNotPath,
			                      "vertex " + std::to_string(v) + " has " +
			                          std::to_string(inner_neighbours) +
			                          " neighbours of degree >= 2"};
		}
		if (inner_neighbours <= 1) ends.push_back(v);
	}
	// Any tree on >= 3 vertices has an inner vertex, and the inner vertices
	// of a tree induce a subtree, so with all inner degrees <= 2 they induce
	// a path with either one vertex (one "end") or two endpoints.
	std::vector<int>& spine = result.spine;
	spine.push_back(ends.front());
	int previous = -1;
	while (true) {
		const int current = spine.back();
		int next = -1;
		for (int w : graph.neighbours(current)) {
			if (w != previous && inner(w)) {
				next = w;
				break;
			}
		}
		if (next == -1) break;
		previous = current;
		spine.push_back(next);
	}
	if (spine.back() < spine.front()) std::reverse(spine.begin(), spine.end());

	result.leaves.resize(spine.size());
	for (std::size_t i = 0; i < spine.size(); ++i) {
		for (int w : graph.neighbours(spine[i])) {
			if (!inner(w)) result.leaves[i].push_back(w);  // neighbour lists are ascending
		}
	}
	for (const std::size_t i : {std::size_t{0}, spine.size() - 1}) {
		if (result.leaves[i].size() == 1) {
			result.ambiguous_ends.push_back(spine[i]);
			if (spine.size() == 1) break;  // a single spine vertex is both ends
		}
	}
	return result;
}

CaterpillarDecomposition decompose_caterpillar_or_throw(const Graph& graph) {
	auto outcome = decompose_caterpillar(graph);
	if (const auto* failure = std::get_if<NotCaterpillar>(&outcome)) {
		throw InputError("graph is not a caterpillar: " + failure->detail);
	}
	return std::get<CaterpillarDecomposition>(std::move(outcome));
}

}  // namespace totalb
