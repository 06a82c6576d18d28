#include "totalb/dense_paths.hpp"

#include <algorithm>

#include "totalb/errors.hpp"
#include "totalb/mdegree.hpp"

namespace totalb {

namespace {

struct SpineDensity {
	std::vector<bool> vertex;  // vertex[i]: spine[i] is dense
	std::vector<bool> edge;    // edge[i]: the spine edge spine[i] -- spine[i+1] is dense
};

SpineDensity spine_density(const Graph& graph, const CaterpillarDecomposition& decomposition,
                           int m) {
	SpineDensity density;
	const auto& spine = decomposition.spine;
	density.vertex.resize(spine.size());
	if (!spine.empty()) density.edge.resize(spine.size() - 1);
	for (std::size_t i = 0; i < spine.size(); ++i) {
		density.vertex[i] = is_dense(graph, m, Element::vertex(spine[i]));
		if (i + 1 < spine.size()) {
			const int e = *graph.edge_between(spine[i], spine[i + 1]);
			density.edge[i] = is_dense(graph, m, Element::edge(e));
		}
	}
	return density;
}

int interval_dense_count(const SpineDensity& density, int first, int last) {
	int q = 0;
	for (int i = first; i <= last; ++i) {
		if (density.vertex[i]) ++q;
		if (i < last && density.edge[i]) ++q;
	}
	return q;
}

// [first, last] is a dense path when all its spine edges and all its interior
// vertices are dense and it contains at least one dense element.
bool interval_is_dense_path(const SpineDensity& density, int first, int last) {
	for (int i = first; i < last; ++i) {
		if (!density.edge[i]) return false;
	}
	for (int i = first + 1; i < last; ++i) {
		if (!density.vertex[i]) return false;
	}
	return interval_dense_count(density, first, last) >= 1;
}

DensePath build_path(const CaterpillarDecomposition& decomposition, const SpineDensity& density,
                     int first, int last) {
	DensePath path;
	path.first = first;
	path.last = last;
	path.vertices.assign(decomposition.spine.begin() + first,
	                     decomposition.spine.begin() + last + 1);
	path.left_dense = density.vertex[first];
	path.right_dense = density.vertex[last];
	path.dense_count = interval_dense_count(density, first, last);
	path.type = (path.left_dense && path.right_dense) ? DensePathType::One
	            : (path.left_dense || path.right_dense) ? DensePathType::Two
	                                                    : DensePathType::Three;
	return path;
}

}  // namespace

const char* to_string(DensePathType type) {
	switch (type) {
		case DensePathType::One: return "type-1";
		case DensePathType::Two: return "type-2";
		case DensePathType::Three: return "type-3";
	}
	return "unknown";
}

std::vector<DensePath> find_dense_paths(const Graph& graph,
                                        const CaterpillarDecomposition& decomposition) {
	std::vector<DensePath> result;
	const int s = static_cast<int>(decomposition.spine.size());
	if (s == 0) return result;
	const int m = total_m_degree(graph);
	const SpineDensity density = spine_density(graph, decomposition, m);

	// Extending [first, last] one step preserves validity exactly when the
	// new edge and the vertex turning interior are both dense, so maximality
	// is a local test.
	const auto extendable_left = [&](int first) {
		return first > 0 && density.edge[first - 1] && density.vertex[first];
	};
	const auto extendable_right = [&](int last) {
		return last + 1 < s && density.edge[last] && density.vertex[last];
	};
	for (int first = 0; first < s; ++first) {
		for (int last = first; last < s; ++last) {
			if (!interval_is_dense_path(density, first, last)) continue;
			if (extendable_left(first) || extendable_right(last)) continue;
			result.push_back(build_path(decomposition, density, first, last));
		}
	}
	return result;
}

int count_dense_in_interval(const Graph& graph, const CaterpillarDecomposition& decomposition,
                            int m, int first, int last) {
	const SpineDensity density = spine_density(graph, decomposition, m);
	return interval_dense_count(density, first, last);
}

PivotClassification classify_pivoted(const Graph& graph,
                                     const CaterpillarDecomposition& decomposition) {
	const int m = total_m_degree(graph);
	if (m < 6) {
		throw InputError("classify_pivoted requires total m-degree >= 6, got " + std::to_string(m));
	}
	const auto dense = dense_elements(graph);
	if (static_cast<int>(dense.size()) != m) {
		return NotPivoted{"graph has " + std::to_string(dense.size()) +
		                      " dense elements, the pivot shapes require exactly m = " +
		                      std::to_string(m),
		                  false};
	}

	// Shape 1: a dense vertex u with d(u) = m - 2 whose degree-2 neighbour u'
	// leads to another dense vertex v.
	std::optional<PivotType1> shape1;
	for (const Element& x : dense) {
		if (!x.is_vertex() || graph.degree(x.id) != m - 2) continue;
		for (int u_prime : graph.neighbours(x.id)) {
			if (graph.degree(u_prime) != 2) continue;
			int v = -1;
			for (int other : graph.neighbours(u_prime)) {
				if (other != x.id) v = other;
			}
			if (v != -1 && is_dense(graph, m, Element::vertex(v))) {
				shape1 = PivotType1{x.id, u_prime, v};
				break;
			}
		}
		if (shape1) break;
	}

	// Shape 2: exactly two dense paths of three dense elements each, joined
	// by a dense-free connector of length at most one, and no dense element
	// off the spine.
	std::optional<PivotType2> shape2;
	bool off_spine_dense = false;
	for (const Element& x : dense) {
		if (x.is_vertex()) {
			if (decomposition.spine_index(x.id) < 0) off_spine_dense = true;
		} else {
			const auto [a, b] = graph.endpoints(x.id);
			if (decomposition.spine_index(a) < 0 || decomposition.spine_index(b) < 0) {
				off_spine_dense = true;
			}
		}
	}
	if (!off_spine_dense) {
		auto paths = find_dense_paths(graph, decomposition);
		if (paths.size() == 2 && paths[0].dense_count == 3 && paths[1].dense_count == 3) {
			const DensePath& left = paths[0];
			const DensePath& right = paths[1];
			if (left.last == right.first) {
				// The paths share one boundary vertex; sharing implies it is
				// not dense, so the connector is automatically dense-free.
				shape2 = PivotType2{left, right, {decomposition.spine[left.last]}};
			} else if (left.last + 1 == right.first) {
				const int a = decomposition.spine[left.last];
				const int b = decomposition.spine[right.first];
				const Element joining_edge = Element::edge(*graph.edge_between(a, b));
				if (!is_dense(graph, m, joining_edge)) {
					shape2 = PivotType2{left, right, {a, b}};
				}
			}
		}
	}

	if (shape1 && shape2) {
		throw InternalError(
		    "classify_pivoted: both pivot shapes matched, but they are mutually exclusive");
	}
	if (shape1) return *shape1;
	if (shape2) return *shape2;
	return NotPivoted{"graph has exactly m dense elements but neither pivot shape", true};
}

}  // namespace totalb
