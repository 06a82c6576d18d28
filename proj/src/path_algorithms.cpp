#include "totalb/path_algorithms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "totalb/construct.hpp"
#include "totalb/errors.hpp"
#include "totalb/mdegree.hpp"

namespace totalb {

namespace {

// One (leaf vertex, leaf edge) pair hanging off a spine vertex.
struct PendantPair {
	int vertex;
	int edge;
};

// 1-based view of a dense path: w[i] / e[i] follow the usual convention that
// e_i joins w_i and w_{i+1}.  pendants[i] lists the pairs available to w_i:
// true leaves first (ascending vertex id), then any spine neighbour outside
// the path (a window into a longer spine may borrow the continuation vertex
// as its last pendant).
struct PathFrame {
	std::vector<int> w;
	std::vector<int> e;
	std::vector<std::vector<PendantPair>> pendants;

	int k() const { return static_cast<int>(w.size()) - 1; }
};

PathFrame make_frame(const Graph& graph, const CaterpillarDecomposition& decomposition,
                     const DensePath& path) {
	PathFrame frame;
	const int k = path.length();
	frame.w.assign(k + 1, -1);
	frame.e.assign(k, -1);
	frame.pendants.resize(k + 1);
	const std::set<int> in_path(path.vertices.begin(), path.vertices.end());
	for (int i = 1; i <= k; ++i) {
		frame.w[i] = path.vertices[i - 1];
		if (i < k) frame.e[i] = *graph.edge_between(path.vertices[i - 1], path.vertices[i]);
		const int spine_pos = decomposition.spine_index(frame.w[i]);
		if (spine_pos < 0) {
			throw InputError("dense path vertex " + std::to_string(frame.w[i]) +
			                 " is not a spine vertex");
		}
		for (int leaf : decomposition.leaves[spine_pos]) {
			frame.pendants[i].push_back({leaf, *graph.edge_between(frame.w[i], leaf)});
		}
		for (int neighbour : graph.neighbours(frame.w[i])) {
			if (graph.degree(neighbour) >= 2 && !in_path.count(neighbour)) {
				frame.pendants[i].push_back({neighbour, *graph.edge_between(frame.w[i], neighbour)});
			}
		}
	}
	return frame;
}

const PendantPair& pendant_at(const PathFrame& frame, int i, int j, const std::string& context) {
	const auto& pairs = frame.pendants[i];
	if (j < 1 || j > static_cast<int>(pairs.size())) {
		throw StructuralError(context + ": spine vertex " + std::to_string(frame.w[i]) +
		                      " has only " + std::to_string(pairs.size()) +
		                      " pendant pairs but pair " + std::to_string(j) + " is required");
	}
	return pairs[j - 1];
}

enum class SpareKind { Vertex, Edge, WholePair };

const PendantPair& spare_pendant(const PathFrame& frame, const TotalColouring& colouring, int i,
                                 SpareKind kind, const std::string& context) {
	for (const PendantPair& pair : frame.pendants[i]) {
		const bool vertex_free = !colouring.is_assigned(Element::vertex(pair.vertex));
		const bool edge_free = !colouring.is_assigned(Element::edge(pair.edge));
		if (kind == SpareKind::Vertex && vertex_free) return pair;
		if (kind == SpareKind::Edge && edge_free) return pair;
		if (kind == SpareKind::WholePair && vertex_free && edge_free) return pair;
	}
	throw StructuralError(context + ": spine vertex " + std::to_string(frame.w[i]) +
	                      " has no spare pendant left for an extra assignment");
}

// The type-1 backbone on positions lo..hi of the frame, all colours offset by
// `shift`.  Writing k for the sub-path length, the spine takes colours
// 1..2k-1 (vertices odd, edges even); each boundary vertex spreads the far
// half of the palette over k-2 pendant pairs and each interior vertex covers
// its k-3 missing colours likewise, alternating which member of a pair takes
// the vertex colour so that adjacent repetitions never occur.
void run_backbone(const Graph& graph, const PathFrame& frame, int lo, int hi, int shift,
                  TotalColouring& colouring, const std::string& context) {
	const int k = hi - lo + 1;
	const auto vertex = [&](int i) { return Element::vertex(frame.w[lo + i - 1]); };
	const auto edge = [&](int i) { return Element::edge(frame.e[lo + i - 1]); };
	const auto put = [&](const Element& x, int colour) {
		assign_checked(graph, colouring, x, colour + shift, context);
	};
	const auto put_pair = [&](int i, int j, int vertex_colour, int edge_colour) {
		const PendantPair& pair = pendant_at(frame, lo + i - 1, j, context);
		put(Element::vertex(pair.vertex), vertex_colour);
		put(Element::edge(pair.edge), edge_colour);
	};

	for (int i = 1; i <= k; ++i) put(vertex(i), 2 * i - 1);
	for (int i = 1; i < k; ++i) put(edge(i), 2 * i);
	for (int j = 1; j <= k - 2; ++j) {
		if (j % 2 == 1) {
			put_pair(1, j, 2 * j + 2, 2 * j + 3);
			put_pair(k, k - j - 1, 2 * k - 2 * j - 2, 2 * k - 2 * j - 3);
		} else {
			put_pair(1, j, 2 * j + 3, 2 * j + 2);
			put_pair(k, k - j - 1, 2 * k - 2 * j - 3, 2 * k - 2 * j - 2);
		}
	}
	for (int i = 2; i <= k - 1; ++i) {
		for (int j = 1; j <= i - 2; ++j) {
			if (j % 2 == 1) {
				put_pair(i, i - j - 1, 2 * i - 2 * j - 2, 2 * i - 2 * j - 3);
			} else {
				put_pair(i, i - j - 1, 2 * i - 2 * j - 3, 2 * i - 2 * j - 2);
			}
		}
		for (int j = 1; j <= k - i - 1; ++j) {
			if (j % 2 == 1) {
				put_pair(i, i + j - 2, 2 * i + 2 * j, 2 * i + 2 * j + 1);
			} else {
				put_pair(i, i + j - 2, 2 * i + 2 * j + 1, 2 * i + 2 * j);
			}
		}
	}
}

void require_shape(const DensePath& path, DensePathType type, int minimum_length,
                   const TotalColouring& colouring, int q, const std::string& context) {
	if (path.type != type) {
		throw InputError(context + ": dense path has type " + to_string(path.type) +
		                 ", expected " + to_string(type));
	}
	if (path.length() < minimum_length) {
		throw InputError(context + ": dense path has " + std::to_string(path.length()) +
		                 " vertices, need at least " + std::to_string(minimum_length));
	}
	if (colouring.k() < q) {
		throw InputError(context + ": palette has " + std::to_string(colouring.k()) +
		                 " colours, the path needs " + std::to_string(q));
	}
}

std::vector<Element> dense_elements_of_path(const Graph& graph, const DensePath& path, int m) {
	std::vector<Element> result;
	const int k = path.length();
	for (int i = 0; i < k; ++i) {
		const Element x = Element::vertex(path.vertices[i]);
		if (is_dense(graph, m, x)) result.push_back(x);
		if (i + 1 < k) {
			const Element f = Element::edge(*graph.edge_between(path.vertices[i], path.vertices[i + 1]));
			if (is_dense(graph, m, f)) result.push_back(f);
		}
	}
	return result;
}

}  // namespace

void assert_dense_path_postconditions(const Graph& graph, const DensePath& path,
                                      const TotalColouring& colouring, int q,
                                      const std::string& context) {
	const int m = total_m_degree(graph);
	const auto dense = dense_elements_of_path(graph, path, m);
	if (static_cast<int>(dense.size()) != q) {
		throw InternalError(context + ": path has " + std::to_string(dense.size()) +
		                    " dense elements, expected q = " + std::to_string(q));
	}
	std::vector<bool> used(q + 1, false);
	for (const Element& x : dense) {
		const auto c = colouring.colour(x);
		if (!c || *c > q || used[*c]) {
			throw InternalError(context + ": dense elements of the path do not carry colours 1.." +
			                    std::to_string(q) + " bijectively (offender " + to_string(x) + ")");
		}
		used[*c] = true;
	}
	for (const Element& x : dense) {
		const int own = *colouring.colour(x);
		std::vector<int> count(q + 1, 0);
		for (const Element& y : graph.total_neighbourhood(x)) {
			if (const auto c = colouring.colour(y)) {
				if (*c <= q) ++count[*c];
			}
		}
		for (int c = 1; c <= q; ++c) {
			if (c != own && count[c] == 0) {
				throw InternalError(context + ": dense element " + to_string(x) +
				                    " does not see palette colour " + std::to_string(c));
			}
		}
		if (graph.total_degree(x) == q - 1) {
			for (int c = 1; c <= q; ++c) {
				if (count[c] > 1) {
					throw InternalError(context + ": tight element " + to_string(x) +
					                    " sees colour " + std::to_string(c) + " twice");
				}
			}
		}
	}
}

void colour_dense_path_type1(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring) {
	const std::string context = "colour_dense_path_type1";
	const int k = path.length();
	const int q = 2 * k - 1;
	require_shape(path, DensePathType::One, 3, colouring, q, context);
	const PathFrame frame = make_frame(graph, decomposition, path);
	run_backbone(graph, frame, 1, k, 0, colouring, context);
	assert_dense_path_postconditions(graph, path, colouring, q, context);
}

void colour_dense_path_type2(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring) {
	const std::string context = "colour_dense_path_type2";
	const int k = path.length();
	const int q = 2 * k - 2;
	require_shape(path, DensePathType::Two, 4, colouring, q, context);
	const PathFrame frame = make_frame(graph, decomposition, path);

	// Drop the non-dense boundary and run the backbone on the k - 1 dense
	// vertices.  d = 1 means the non-dense boundary is w_1, in which case the
	// backbone shifts up by one and the spare palette colour is 1, introduced
	// on e_1; otherwise the spare colour is q, introduced on e_{k-1}.
	const int d = path.left_dense ? 0 : 1;
	run_backbone(graph, frame, 1 + d, k - 1 + d, d, colouring, context);
	const int spare_colour = (d == 1) ? 1 : q;
	const Element boundary_edge = Element::edge(frame.e[(d == 1) ? 1 : k - 1]);
	assign_checked(graph, colouring, boundary_edge, spare_colour, context);

	// Spread the spare colour so every dense element of the path sees it: one
	// pendant per backbone vertex, alternating vertex/edge so that both the
	// spine vertices and the spine edges pick it up.
	for (int i = 1; i <= k - 2; ++i) {
		const int target = (d == 1) ? i + 2 : k - i - 1;
		const SpareKind kind = (i % 2 == 1) ? SpareKind::Vertex : SpareKind::Edge;
		const PendantPair& pair = spare_pendant(frame, colouring, target, kind, context);
		const Element slot =
		    (kind == SpareKind::Vertex) ? Element::vertex(pair.vertex) : Element::edge(pair.edge);
		assign_checked(graph, colouring, slot, spare_colour, context);
	}

	// The boundary edge next to the dropped vertex cannot reach its q - 1
	// pickups from the scheme above: its missing colours are placed on its
	// own uncoloured neighbours (the dropped vertex, that vertex's edges and
	// the spare pendant edges beside it).
	make_pickups_complete(graph, colouring, boundary_edge, context);
	assert_dense_path_postconditions(graph, path, colouring, q, context);
}

void colour_dense_path_type3(const Graph& graph, const CaterpillarDecomposition& decomposition,
                             const DensePath& path, TotalColouring& colouring) {
	const std::string context = "colour_dense_path_type3";
	const int k = path.length();
	const int q = 2 * k - 3;
	require_shape(path, DensePathType::Three, 5, colouring, q, context);
	const PathFrame frame = make_frame(graph, decomposition, path);

	// Neither boundary vertex is dense: the backbone runs on the k - 2
	// interior vertices (shifted to colours 2..q-1) and the two remaining
	// palette colours 1 and q enter on the boundary edges.
	run_backbone(graph, frame, 2, k - 1, 1, colouring, context);
	const Element left_edge = Element::edge(frame.e[1]);
	const Element right_edge = Element::edge(frame.e[k - 1]);
	assign_checked(graph, colouring, left_edge, q, context);
	assign_checked(graph, colouring, right_edge, 1, context);
	assign_checked(graph, colouring,
	               Element::edge(spare_pendant(frame, colouring, 2, SpareKind::Edge, context).edge),
	               1, context);
	assign_checked(
	    graph, colouring,
	    Element::edge(spare_pendant(frame, colouring, k - 1, SpareKind::Edge, context).edge), q,
	    context);
	for (int i = 3; i <= k - 2; ++i) {
		const PendantPair& pair = spare_pendant(frame, colouring, i, SpareKind::WholePair, context);
		const int vertex_colour = (i % 2 == 1) ? 1 : q;
		const int edge_colour = (i % 2 == 1) ? q : 1;
		assign_checked(graph, colouring, Element::vertex(pair.vertex), vertex_colour, context);
		assign_checked(graph, colouring, Element::edge(pair.edge), edge_colour, context);
	}
	make_pickups_complete(graph, colouring, left_edge, context);
	make_pickups_complete(graph, colouring, right_edge, context);
	assert_dense_path_postconditions(graph, path, colouring, q, context);
}

}  // namespace totalb
