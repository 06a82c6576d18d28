#ifndef TOTALB_CATERPILLAR_HPP
#define TOTALB_CATERPILLAR_HPP

#include <string>
#include <variant>
#include <vector>

#include "totalb/graph.hpp"

namespace totalb {

// A caterpillar is a tree whose vertices of degree >= 2 induce a path (the
// spine); every other vertex is a leaf hanging off a spine vertex.
struct CaterpillarDecomposition {
	// Spine vertices in path order.  The orientation is canonical: the end
	// with the smaller vertex id comes first.  Empty for graphs on one or two
	// vertices, which have no vertex of degree >= 2.
	std::vector<int> spine;

	// leaves[i] lists the degree-1 neighbours of spine[i], ascending.
	std::vector<std::vector<int>> leaves;

	// Spine ends carrying exactly one leaf: swapping that leaf with the end
	// yields another path containing all vertices of degree >= 2, so the
	// backbone is not unique as a vertex set even though the decomposition
	// above is canonical.
	std::vector<int> ambiguous_ends;

	int spine_index(int vertex) const;  // -1 when not a spine vertex
};

struct NotCaterpillar {
	enum class Reason {
		NotTree,       // empty, disconnected, or containing a cycle
		SpineNotPath,  // the vertices of degree >= 2 do not induce a path
	};
	Reason reason;
	std::string detail;
};

using DecomposeOutcome = std::variant<CaterpillarDecomposition, NotCaterpillar>;

// Classifies the graph and extracts the decomposition when it is a
// caterpillar.
DecomposeOutcome decompose_caterpillar(const Graph& graph);

// Same, but converts the failure branch into an InputError.
CaterpillarDecomposition decompose_caterpillar_or_throw(const Graph& graph);

}  // namespace totalb

#endif  // TOTALB_CATERPILLAR_HPP
