#ifndef TOTALB_DENSE_PATHS_HPP
#define TOTALB_DENSE_PATHS_HPP

#include <string>
#include <variant>
#include <vector>

#include "totalb/caterpillar.hpp"
#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// A dense path is a subpath of the spine whose spine edges are all dense and
// whose interior vertices are all dense; its boundary vertices may or may not
// be dense.  Writing q for its number of dense elements and k for its vertex
// count, q is 2k-1, 2k-2 or 2k-3 according to how many boundary vertices are
// dense.
enum class DensePathType {
	One,    // both boundary vertices dense  (q = 2k - 1)
	Two,    // exactly one boundary vertex dense  (q = 2k - 2)
	Three,  // neither boundary vertex dense  (q = 2k - 3)
};

const char* to_string(DensePathType type);

struct DensePath {
	int first = 0;  // inclusive spine indices into the decomposition
	int last = 0;
	std::vector<int> vertices;  // spine vertex ids, in spine order
	bool left_dense = false;
	bool right_dense = false;
	DensePathType type = DensePathType::Three;
	int dense_count = 0;  // q

	int length() const { return static_cast<int>(vertices.size()); }  // k
};

// All maximal dense paths of the spine, ordered by leftmost spine index.
// Maximality is with respect to single-step extension, so two maximal paths
// may overlap in one shared (necessarily non-dense) boundary vertex.  Dense
// elements off the spine (pendant edges) belong to no dense path.
std::vector<DensePath> find_dense_paths(const Graph& graph,
                                        const CaterpillarDecomposition& decomposition);

// Dense elements (q) of the spine interval [first, last] of a dense path.
int count_dense_in_interval(const Graph& graph, const CaterpillarDecomposition& decomposition,
                            int m, int first, int last);

// ---------------------------------------------------------------------------

// A caterpillar with exactly m dense elements is pivoted when either
//  (1) some dense vertex u has d(u) = m - 2 and a degree-2 neighbour u'
//      whose other neighbour is a dense vertex v != u, or
//  (2) its dense elements form exactly two dense paths of three dense
//      elements each, joined by a dense-free connector of at most one edge.
// Pivoted caterpillars cannot reach the m-degree bound: their optimum is
// m - 1.
struct PivotType1 {
	int u;        // dense vertex with d(u) = m - 2
	int u_prime;  // degree-2 neighbour of u
	int v;        // dense other neighbour of u_prime
};

struct PivotType2 {
	DensePath first;
	DensePath second;
	std::vector<int> connector;  // spine vertex ids from first's right end to second's left end
};

struct NotPivoted {
	std::string diagnostic;
	// True when the graph has exactly m dense elements (the pivot definitions
	// only apply in that regime); false explains why classification was
	// vacuous.
	bool dense_count_is_m = false;
};

using PivotClassification = std::variant<PivotType1, PivotType2, NotPivoted>;

// Classifies a caterpillar with total m-degree >= 6 against the two pivot
// shapes.  Errors if the m-degree is below 6.  The two shapes are mutually
// exclusive; matching both raises InternalError.
PivotClassification classify_pivoted(const Graph& graph,
                                     const CaterpillarDecomposition& decomposition);

}  // namespace totalb

#endif  // TOTALB_DENSE_PATHS_HPP
