#include "totalb/solver.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "totalb/closed_forms.hpp"
#include "totalb/construct.hpp"
#include "totalb/errors.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/path_algorithms.hpp"
#include "totalb/verify.hpp"

namespace totalb {

namespace {

Element vertex_of(int v) { return Element::vertex(v); }

Element edge_of(const Graph& graph, int a, int b, const std::string& context) {
	const auto id = graph.edge_between(a, b);
	if (!id) {
		throw InternalError(context + ": expected an edge between vertices " + std::to_string(a) +
		                    " and " + std::to_string(b));
	}
	return Element::edge(*id);
}

// Deterministic completion order: spine vertices left to right, remaining
// vertices ascending, spine edges left to right, remaining edges ascending.
std::vector<Element> completion_order(const Graph& graph,
                                      const CaterpillarDecomposition& decomposition) {
	std::vector<Element> order;
	order.reserve(graph.element_count());
	std::vector<bool> spine_vertex(graph.vertex_count(), false);
	for (int v : decomposition.spine) {
		order.push_back(vertex_of(v));
		spine_vertex[v] = true;
	}
	for (int v = 0; v < graph.vertex_count(); ++v) {
		if (!spine_vertex[v]) order.push_back(vertex_of(v));
	}
	std::vector<bool> spine_edge(graph.edge_count(), false);
	for (std::size_t i = 0; i + 1 < decomposition.spine.size(); ++i) {
		const Element e = edge_of(graph, decomposition.spine[i], decomposition.spine[i + 1],
		                          "completion order");
		order.push_back(e);
		spine_edge[e.id] = true;
	}
	for (int e = 0; e < graph.edge_count(); ++e) {
		if (!spine_edge[e]) order.push_back(Element::edge(e));
	}
	return order;
}

// These run on trees (the caller has already decomposed the graph).
bool is_path_shape(const Graph& graph) { return graph.max_degree() <= 2; }

bool is_star_shape(const Graph& graph) {
	return graph.max_degree() == graph.vertex_count() - 1;
}

int smallest_leaf_neighbour(const Graph& graph, int v, const std::string& context) {
	for (int x : graph.neighbours(v)) {
		if (graph.degree(x) == 1) return x;
	}
	throw StructuralError(context + ": vertex " + std::to_string(v) +
	                      " has no pendant leaf to host the construction");
}

// --- total m-degree 5, neither path nor star -------------------------------

// One vertex of degree 4 (no degree-3 vertex can coexist at m-degree 5):
// colour the hub like a star and finish greedily.
void colour_degree4_case(const Graph& graph, TotalColouring& colouring, int u,
                         const std::string& ctx) {
	assign_checked(graph, colouring, vertex_of(u), 1, ctx);
	const auto& nb = graph.neighbours(u);
	for (int i = 1; i <= 4; ++i) {
		assign_checked(graph, colouring, edge_of(graph, u, nb[i - 1], ctx), i + 1, ctx);
	}
	for (int i = 1; i <= 3; ++i) {
		assign_checked(graph, colouring, vertex_of(nb[i - 1]), i + 2, ctx);
	}
	assign_checked(graph, colouring, vertex_of(nb[3]), 2, ctx);
}

// Degree-3 hub u with roles: u1 = smallest neighbour of degree >= 2,
// u2 = smallest leaf neighbour, u3 = the remaining neighbour, and
// v = smallest neighbour of u1 other than u.
struct Degree3Roles {
	int u1 = -1;
	int u2 = -1;
	int u3 = -1;
	int v = -1;
};

Degree3Roles pick_degree3_roles(const Graph& graph, int u, const std::string& ctx) {
	Degree3Roles roles;
	const auto& nb = graph.neighbours(u);
	for (int x : nb) {
		if (graph.degree(x) >= 2) {
			roles.u1 = x;
			break;
		}
	}
	if (roles.u1 < 0) {
		throw InternalError(ctx + ": every neighbour of vertex " + std::to_string(u) +
		                    " is a leaf, so the graph is a star and should not reach here");
	}
	for (int x : nb) {
		if (graph.degree(x) == 1) {
			roles.u2 = x;
			break;
		}
	}
	if (roles.u2 < 0) {
		throw InternalError(ctx + ": a degree-3 vertex of a caterpillar with total m-degree 5 "
		                          "always has a leaf neighbour, but vertex " +
		                    std::to_string(u) + " has none");
	}
	for (int x : nb) {
		if (x != roles.u1 && x != roles.u2) roles.u3 = x;
	}
	for (int x : graph.neighbours(roles.u1)) {
		if (x != u) {
			roles.v = x;
			break;
		}
	}
	if (roles.v < 0) {
		throw InternalError(ctx + ": vertex " + std::to_string(roles.u1) +
		                    " has degree >= 2 but no neighbour besides " + std::to_string(u));
	}
	return roles;
}

// The shared opening of every degree-3 case.
void colour_degree3_preamble(const Graph& graph, TotalColouring& colouring, int u,
                             const Degree3Roles& r, const std::string& ctx) {
	assign_checked(graph, colouring, vertex_of(u), 1, ctx);
	assign_checked(graph, colouring, edge_of(graph, u, r.u1, ctx), 2, ctx);
	assign_checked(graph, colouring, edge_of(graph, u, r.u2, ctx), 3, ctx);
	assign_checked(graph, colouring, edge_of(graph, u, r.u3, ctx), 4, ctx);
	assign_checked(graph, colouring, vertex_of(r.u1), 5, ctx);
	assign_checked(graph, colouring, vertex_of(r.u2), 5, ctx);
	assign_checked(graph, colouring, vertex_of(r.u3), 5, ctx);
	assign_checked(graph, colouring, edge_of(graph, r.u1, r.v, ctx), 3, ctx);
	assign_checked(graph, colouring, vertex_of(r.v), 4, ctx);
}

// Pre-assignments around the second degree-3 vertex w so the greedy tail
// cannot strand any element.
void colour_second_degree3(const Graph& graph, TotalColouring& colouring, int u,
                           const Degree3Roles& r, int w, const std::string& ctx) {
	const auto others = [&](int centre, int excluded) {
		std::vector<int> result;
		for (int x : graph.neighbours(centre)) {
			if (x != excluded) result.push_back(x);
		}
		return result;
	};
	if (graph.edge_between(u, w)) {
		if (w == r.u1) {
			// w's neighbours are u, v and one more; finish that pendant side.
			int w3 = -1;
			for (int x : graph.neighbours(w)) {
				if (x != u && x != r.v) w3 = x;
			}
			if (w3 < 0) {
				throw InternalError(ctx + ": degree-3 vertex " + std::to_string(w) +
				                    " should have a third neighbour");
			}
			assign_checked(graph, colouring, edge_of(graph, w, w3, ctx), 1, ctx);
			assign_checked(graph, colouring, vertex_of(w3), 2, ctx);
		} else {
			// w == u3.
			const auto rest = others(w, u);
			const int w2 = rest[0], w3 = rest[1];
			assign_checked(graph, colouring, edge_of(graph, w, w2, ctx), 1, ctx);
			assign_checked(graph, colouring, vertex_of(w2), 2, ctx);
			assign_checked(graph, colouring, edge_of(graph, w, w3, ctx), 2, ctx);
			assign_checked(graph, colouring, vertex_of(w3), 1, ctx);
		}
		return;
	}
	int shared = -1;
	for (int x : graph.neighbours(u)) {
		if (graph.edge_between(x, w)) shared = x;
	}
	if (shared == r.u1) {
		// The only vertex that can share u1 with u is v itself.
		if (w != r.v) {
			throw InternalError(ctx + ": a second degree-3 vertex sharing neighbour " +
			                    std::to_string(r.u1) + " must be " + std::to_string(r.v));
		}
		const auto rest = others(w, r.u1);
		const int w2 = rest[0], w3 = rest[1];
		assign_checked(graph, colouring, edge_of(graph, w, w2, ctx), 1, ctx);
		assign_checked(graph, colouring, vertex_of(w2), 2, ctx);
		assign_checked(graph, colouring, edge_of(graph, w, w3, ctx), 2, ctx);
		assign_checked(graph, colouring, vertex_of(w3), 1, ctx);
	} else if (shared == r.u3) {
		const auto rest = others(w, r.u3);
		const int w2 = rest[0], w3 = rest[1];
		assign_checked(graph, colouring, vertex_of(w), 1, ctx);
		assign_checked(graph, colouring, edge_of(graph, w, r.u3, ctx), 2, ctx);
		assign_checked(graph, colouring, vertex_of(w2), 2, ctx);
		assign_checked(graph, colouring, edge_of(graph, w, w2, ctx), 3, ctx);
		assign_checked(graph, colouring, vertex_of(w3), 3, ctx);
		assign_checked(graph, colouring, edge_of(graph, w, w3, ctx), 4, ctx);
	} else if (shared >= 0) {
		throw InternalError(ctx + ": vertices " + std::to_string(u) + " and " + std::to_string(w) +
		                    " share the leaf " + std::to_string(shared));
	} else {
		// w lies far from u: colour its whole closed neighbourhood.
		assign_checked(graph, colouring, vertex_of(w), 5, ctx);
		int next = 1;
		if (graph.edge_between(w, r.v)) {
			assign_checked(graph, colouring, edge_of(graph, w, r.v, ctx), 1, ctx);
			next = 2;
		}
		for (int x : graph.neighbours(w)) {
			if (x == r.v) continue;
			assign_checked(graph, colouring, edge_of(graph, w, x, ctx), next++, ctx);
		}
		for (int x : graph.neighbours(w)) {
			if (colouring.is_assigned(vertex_of(x))) continue;
			if (graph.edge_between(x, r.v)) {
				// x sits between w and the colour-4 vertex v, so it cannot
				// carry 4 itself; any remaining small colour serves, and w
				// still sees 4 on its other neighbours.
				const int free = smallest_free_colour(graph, colouring, vertex_of(x), 3);
				if (free == 0) {
					throw InternalError(ctx + ": no small colour free for vertex " +
					                    std::to_string(x));
				}
				assign_checked(graph, colouring, vertex_of(x), free, ctx);
			} else {
				assign_checked(graph, colouring, vertex_of(x), 4, ctx);
			}
		}
	}
}

// Three degree-3 vertices force one fixed eight-vertex caterpillar; colour
// the two outer hubs explicitly.
void colour_triple_degree3(const Graph& graph, TotalColouring& colouring, int u,
                           const Degree3Roles& r, const std::string& ctx) {
	int u1p = -1;
	for (int x : graph.neighbours(r.u1)) {
		if (x != u && x != r.v) u1p = x;
	}
	if (u1p < 0) {
		throw InternalError(ctx + ": vertex " + std::to_string(r.u1) +
		                    " should have three neighbours");
	}
	std::vector<int> u3n;
	for (int x : graph.neighbours(r.u3)) {
		if (x != u) u3n.push_back(x);
	}
	if (u3n.size() != 2) {
		throw InternalError(ctx + ": vertex " + std::to_string(r.u3) +
		                    " should have exactly two neighbours besides " + std::to_string(u));
	}
	assign_checked(graph, colouring, vertex_of(u1p), 3, ctx);
	assign_checked(graph, colouring, edge_of(graph, r.u1, u1p, ctx), 4, ctx);
	assign_checked(graph, colouring, vertex_of(u3n[0]), 1, ctx);
	assign_checked(graph, colouring, edge_of(graph, r.u3, u3n[0], ctx), 2, ctx);
	assign_checked(graph, colouring, vertex_of(u3n[1]), 2, ctx);
	assign_checked(graph, colouring, edge_of(graph, r.u3, u3n[1], ctx), 1, ctx);
}

// --- dense pendant edge (total m-degree >= 6) -------------------------------

// The spine endpoint of the first dense pendant edge, or -1 when none exists.
int dense_pendant_hub(const Graph& graph, int m) {
	for (int e = 0; e < graph.edge_count(); ++e) {
		if (!is_dense(graph, m, Element::edge(e))) continue;
		const auto [a, b] = graph.endpoints(e);
		if (graph.degree(a) == 1) return b;
		if (graph.degree(b) == 1) return a;
	}
	return -1;
}

// Case with d(u) = m - 2: u's star misses one colour, which a companion dense
// vertex v (coloured m and made pickup-complete) witnesses instead.  The
// layout of the fill steps depends on where v sits relative to u.
TotalColouring attempt_pendant_case2(const Graph& graph,
                                     const CaterpillarDecomposition& decomposition, int m, int u,
                                     int v) {
	const std::string ctx = "dense pendant edge construction";
	TotalColouring colouring(graph, m);
	assign_checked(graph, colouring, vertex_of(v), m, ctx);
	assign_checked(graph, colouring, vertex_of(u), 1, ctx);

	const auto assign_hub_edges = [&](const std::vector<int>& ordered) {
		for (std::size_t i = 0; i < ordered.size(); ++i) {
			assign_checked(graph, colouring, edge_of(graph, u, ordered[i], ctx),
			               static_cast<int>(i) + 2, ctx);
		}
	};
	const auto hub_neighbours_first = [&](int first) {
		std::vector<int> ordered{first};
		for (int x : graph.neighbours(u)) {
			if (x != first) ordered.push_back(x);
		}
		return ordered;
	};

	if (graph.edge_between(u, v)) {
		// v adjacent to u: edge (u, v) takes colour 2, the rest of u's star
		// takes m, and v completes itself next door.
		const auto ordered = hub_neighbours_first(v);
		assign_hub_edges(ordered);
		for (std::size_t i = 1; i < ordered.size(); ++i) {
			assign_checked(graph, colouring, vertex_of(ordered[i]), m, ctx);
		}
		make_pickups_complete(graph, colouring, vertex_of(v), ctx);
	} else {
		int shared = -1;
		for (int x : graph.neighbours(u)) {
			if (graph.edge_between(x, v)) shared = x;
		}
		if (shared >= 0) {
			const int u1 = shared;
			if (graph.degree(u1) > 2) {
				const auto ordered = hub_neighbours_first(u1);
				assign_hub_edges(ordered);
				int w = -1;
				for (int x : graph.neighbours(u1)) {
					if (x != u && x != v) {
						w = x;
						break;
					}
				}
				for (std::size_t i = 1; i < ordered.size(); ++i) {
					assign_checked(graph, colouring, vertex_of(ordered[i]), m, ctx);
				}
				assign_checked(graph, colouring, edge_of(graph, u1, w, ctx), m, ctx);
				assign_checked(graph, colouring, vertex_of(u1), 3, ctx);
				assign_checked(graph, colouring, edge_of(graph, u1, v, ctx), 1, ctx);
				make_pickups_complete(graph, colouring, vertex_of(v), ctx);
			} else {
				// d(u1) = 2: a third dense vertex w carries colour 2.
				int w = -1;
				for (int x = 0; x < graph.vertex_count(); ++x) {
					if (x != u && x != v && x != u1 && is_dense(graph, m, vertex_of(x))) {
						w = x;
						break;
					}
				}
				if (w < 0) {
					throw StructuralError(ctx + ": no dense vertex besides " + std::to_string(u) +
					                      " and " + std::to_string(v) +
					                      " to witness the spare colour");
				}
				if (graph.edge_between(u, w)) {
					// w inside u's star: it swaps roles with the last hub edge.
					std::vector<int> ordered{u1};
					for (int x : graph.neighbours(u)) {
						if (x != u1 && x != w) ordered.push_back(x);
					}
					ordered.push_back(w);
					assign_hub_edges(ordered);
					assign_checked(graph, colouring, vertex_of(w), 2, ctx);
					assign_checked(graph, colouring, vertex_of(u1), m - 1, ctx);
					for (std::size_t i = 1; i + 1 < ordered.size(); ++i) {
						assign_checked(graph, colouring, vertex_of(ordered[i]), m, ctx);
					}
					int y = -1;
					for (int x : graph.neighbours(w)) {
						if (x != u) {
							y = x;
							break;
						}
					}
					assign_checked(graph, colouring, edge_of(graph, w, y, ctx), m, ctx);
					make_pickups_complete(graph, colouring, vertex_of(w), ctx);
					assign_checked(graph, colouring, edge_of(graph, u1, v, ctx), 1, ctx);
					make_pickups_complete(graph, colouring, vertex_of(v), ctx);
				} else if (graph.edge_between(v, w)) {
					const auto ordered = hub_neighbours_first(u1);
					assign_hub_edges(ordered);
					for (std::size_t i = 1; i < ordered.size(); ++i) {
						assign_checked(graph, colouring, vertex_of(ordered[i]), m, ctx);
					}
					assign_checked(graph, colouring, vertex_of(w), 2, ctx);
					assign_checked(graph, colouring, vertex_of(u1), 3, ctx);
					assign_checked(graph, colouring, edge_of(graph, u1, v, ctx), 1, ctx);
					assign_checked(graph, colouring, edge_of(graph, v, w, ctx), 4, ctx);
					make_pickups_complete(graph, colouring, vertex_of(v), ctx);
					make_pickups_complete(graph, colouring, vertex_of(w), ctx);
				} else {
					const auto ordered = hub_neighbours_first(u1);
					assign_hub_edges(ordered);
					for (std::size_t i = 1; i < ordered.size(); ++i) {
						assign_checked(graph, colouring, vertex_of(ordered[i]), m, ctx);
					}
					assign_checked(graph, colouring, vertex_of(u1), m - 1, ctx);
					assign_checked(graph, colouring, vertex_of(w), 2, ctx);
					assign_checked(graph, colouring, edge_of(graph, u1, v, ctx), 1, ctx);
					int wp = -1;
					for (int x : graph.neighbours(w)) {
						if (graph.edge_between(x, v)) wp = x;
					}
					int uj = -1;
					for (int x : graph.neighbours(w)) {
						if (graph.edge_between(x, u)) uj = x;
					}
					if (wp >= 0) {
						assign_checked(graph, colouring, vertex_of(wp), 3, ctx);
						assign_checked(graph, colouring, edge_of(graph, w, wp, ctx), 1, ctx);
						assign_checked(graph, colouring, edge_of(graph, v, wp, ctx), 2, ctx);
					} else if (uj >= 0) {
						assign_checked(graph, colouring, edge_of(graph, w, uj, ctx), 1, ctx);
					}
					make_pickups_complete(graph, colouring, vertex_of(w), ctx);
					make_pickups_complete(graph, colouring, vertex_of(v), ctx);
				}
			}
		} else {
			// v at distance >= 3: the two stars cannot interfere.
			std::vector<int> ordered = graph.neighbours(u);
			assign_hub_edges(ordered);
			for (int x : ordered) {
				assign_checked(graph, colouring, vertex_of(x), m, ctx);
			}
			make_pickups_complete(graph, colouring, vertex_of(v), ctx);
		}
	}

	greedy_complete(graph, colouring, completion_order(graph, decomposition), ctx);
	expect_valid(graph, colouring, ctx);
	return colouring;
}

std::string describe(const PivotType1& p) {
	std::ostringstream out;
	out << "pivot shape 1: dense vertex " << p.u << " of degree m-2, degree-2 neighbour "
	    << p.u_prime << ", dense vertex " << p.v << " beyond it";
	return out.str();
}

std::string describe(const PivotType2& p) {
	std::ostringstream out;
	out << "pivot shape 2: dense paths [" << p.first.vertices.front() << ".."
	    << p.first.vertices.back() << "] and [" << p.second.vertices.front() << ".."
	    << p.second.vertices.back() << "] joined across " << (p.connector.size() - 1)
	    << " edge(s)";
	return out.str();
}

}  // namespace

const char* to_string(SolveMethod method) {
	switch (method) {
		case SolveMethod::ClosedFormPath: return "closed-form-path";
		case SolveMethod::ClosedFormStar: return "closed-form-star";
		case SolveMethod::SmallMDegree: return "small-m-degree";
		case SolveMethod::PivotedMinusOne: return "pivoted-minus-one";
		case SolveMethod::DenseOutsideSpine: return "dense-outside-spine";
		case SolveMethod::SingleDensePath: return "single-dense-path";
		case SolveMethod::FallbackExact: return "fallback-exact";
		case SolveMethod::OutsideTheoremScope: return "outside-theorem-scope";
	}
	return "unknown";
}

TotalColouring colour_small_m_degree(const Graph& graph,
                                     const CaterpillarDecomposition& decomposition) {
	if (is_path_shape(graph)) return colour_path(graph);
	if (is_star_shape(graph)) return colour_star(graph);
	const int m = total_m_degree(graph);
	if (m > 5) {
		throw InputError("colour_small_m_degree requires total m-degree at most 5, got " +
		                 std::to_string(m));
	}
	if (m < 5) {
		throw InternalError(
		    "a caterpillar that is neither a path nor a star has total m-degree 5, got " +
		    std::to_string(m));
	}
	const std::string ctx = "small m-degree construction";
	TotalColouring colouring(graph, 5);

	int u4 = -1;
	for (int v = 0; v < graph.vertex_count(); ++v) {
		if (graph.degree(v) == 4) {
			u4 = v;
			break;
		}
	}
	if (u4 >= 0) {
		colour_degree4_case(graph, colouring, u4, ctx);
	} else {
		std::vector<int> d3;
		for (int v = 0; v < graph.vertex_count(); ++v) {
			if (graph.degree(v) == 3) d3.push_back(v);
		}
		if (d3.empty() || d3.size() > 3) {
			throw InternalError(ctx + ": expected one to three degree-3 vertices, found " +
			                    std::to_string(d3.size()));
		}
		int u = d3[0];
		if (d3.size() == 3) {
			u = -1;
			for (int x : d3) {
				bool middle = true;
				for (int y : d3) {
					if (y != x && !graph.edge_between(x, y)) middle = false;
				}
				if (middle) u = x;
			}
			if (u < 0) {
				throw InternalError(ctx +
				                    ": three degree-3 vertices, none adjacent to the other two");
			}
		}
		const Degree3Roles roles = pick_degree3_roles(graph, u, ctx);
		colour_degree3_preamble(graph, colouring, u, roles, ctx);
		if (d3.size() == 3) {
			colour_triple_degree3(graph, colouring, u, roles, ctx);
		} else if (d3.size() == 2) {
			const int w = (d3[0] == u) ? d3[1] : d3[0];
			colour_second_degree3(graph, colouring, u, roles, w, ctx);
		}
	}
	greedy_complete(graph, colouring, completion_order(graph, decomposition), ctx);
	expect_valid(graph, colouring, ctx);
	return colouring;
}

TotalColouring colour_pivoted(const Graph& graph, const CaterpillarDecomposition& decomposition,
                              const PivotClassification& classification) {
	const int m = total_m_degree(graph);
	const int k = m - 1;
	const std::string ctx = "pivoted construction";
	TotalColouring colouring(graph, k);

	if (const auto* p = std::get_if<PivotType1>(&classification)) {
		const int u = p->u;
		if (graph.degree(u) != m - 2) {
			throw InternalError(ctx + ": pivot vertex " + std::to_string(u) +
			                    " should have degree m-2");
		}
		std::vector<int> nb{p->u_prime};
		for (int x : graph.neighbours(u)) {
			if (x != p->u_prime) nb.push_back(x);
		}
		assign_checked(graph, colouring, vertex_of(u), 1, ctx);
		for (std::size_t i = 1; i <= nb.size(); ++i) {
			assign_checked(graph, colouring, edge_of(graph, u, nb[i - 1], ctx),
			               static_cast<int>(i) + 1, ctx);
		}
		for (std::size_t i = 1; i + 1 <= nb.size(); ++i) {
			assign_checked(graph, colouring, vertex_of(nb[i - 1]), static_cast<int>(i) + 2, ctx);
		}
		assign_checked(graph, colouring, vertex_of(nb.back()), 2, ctx);
		assign_checked(graph, colouring, edge_of(graph, p->u_prime, p->v, ctx), 1, ctx);
		assign_checked(graph, colouring, vertex_of(p->v), 2, ctx);
		int next = 3;
		for (int x : graph.neighbours(p->v)) {
			if (x == p->u_prime) continue;
			if (next > k) {
				throw InternalError(ctx + ": companion vertex " + std::to_string(p->v) +
				                    " has too many edges for the palette");
			}
			assign_checked(graph, colouring, edge_of(graph, p->v, x, ctx), next++, ctx);
		}
		for (int x : graph.neighbours(p->v)) {
			if (x != p->u_prime) assign_checked(graph, colouring, vertex_of(x), 1, ctx);
		}
	} else if (const auto* p2 = std::get_if<PivotType2>(&classification)) {
		if (m != 6) {
			throw InternalError(ctx + ": pivot shape 2 only occurs at total m-degree 6, got " +
			                    std::to_string(m));
		}
		if (p2->first.length() != 3 || p2->second.length() != 3) {
			throw InternalError(ctx + ": pivot shape 2 requires two three-vertex dense paths");
		}
		const int w1 = p2->first.vertices[0];
		const int w2 = p2->first.vertices[1];
		const int w3 = p2->second.vertices[1];
		const int w4 = p2->second.vertices[2];
		const int w2p = smallest_leaf_neighbour(graph, w2, ctx);
		const int w3p = smallest_leaf_neighbour(graph, w3, ctx);
		if (p2->connector.size() == 1) {
			const int v = p2->connector[0];
			assign_checked(graph, colouring, edge_of(graph, w1, w2, ctx), 1, ctx);
			assign_checked(graph, colouring, vertex_of(w2), 2, ctx);
			assign_checked(graph, colouring, edge_of(graph, w2, v, ctx), 3, ctx);
			assign_checked(graph, colouring, edge_of(graph, v, w3, ctx), 4, ctx);
			assign_checked(graph, colouring, vertex_of(w3), 5, ctx);
			assign_checked(graph, colouring, vertex_of(w1), 4, ctx);
			assign_checked(graph, colouring, edge_of(graph, w2, w2p, ctx), 5, ctx);
			assign_checked(graph, colouring, edge_of(graph, w3, w4, ctx), 1, ctx);
			assign_checked(graph, colouring, edge_of(graph, w3, w3p, ctx), 2, ctx);
			assign_checked(graph, colouring, vertex_of(w4), 3, ctx);
			assign_checked(graph, colouring, vertex_of(w3p), 1, ctx);
			assign_checked(graph, colouring, vertex_of(v), 1, ctx);
		} else if (p2->connector.size() == 2) {
			const int u = p2->connector[0];
			const int v = p2->connector[1];
			assign_checked(graph, colouring, edge_of(graph, w1, w2, ctx), 1, ctx);
			assign_checked(graph, colouring, vertex_of(w2), 2, ctx);
			assign_checked(graph, colouring, edge_of(graph, w2, u, ctx), 3, ctx);
			assign_checked(graph, colouring, edge_of(graph, v, w3, ctx), 4, ctx);
			assign_checked(graph, colouring, vertex_of(w3), 5, ctx);
			assign_checked(graph, colouring, vertex_of(w1), 4, ctx);
			assign_checked(graph, colouring, edge_of(graph, w2, w2p, ctx), 5, ctx);
			assign_checked(graph, colouring, vertex_of(u), 4, ctx);
			assign_checked(graph, colouring, vertex_of(w4), 1, ctx);
			assign_checked(graph, colouring, edge_of(graph, w3, w4, ctx), 2, ctx);
			assign_checked(graph, colouring, vertex_of(v), 3, ctx);
			assign_checked(graph, colouring, edge_of(graph, w3, w3p, ctx), 1, ctx);
			assign_checked(graph, colouring, vertex_of(w3p), 2, ctx);
			assign_checked(graph, colouring, edge_of(graph, u, v, ctx), 1, ctx);
		} else {
			throw InternalError(ctx + ": pivot shape 2 connector must span one or two vertices");
		}
	} else {
		throw InputError("colour_pivoted requires a pivot classification, not NotPivoted");
	}

	greedy_complete(graph, colouring, completion_order(graph, decomposition), ctx);
	expect_valid(graph, colouring, ctx);
	return colouring;
}

std::optional<TotalColouring> colour_dense_outside_spine(
    const Graph& graph, const CaterpillarDecomposition& decomposition) {
	const int m = total_m_degree(graph);
	const std::string ctx = "dense pendant edge construction";
	const int u = dense_pendant_hub(graph, m);
	if (u < 0) {
		throw InputError("colour_dense_outside_spine requires a dense pendant edge");
	}
	const int du = graph.degree(u);
	if (du != m - 1 && du != m - 2) {
		throw InternalError(ctx + ": hub " + std::to_string(u) + " has degree " +
		                    std::to_string(du) + ", expected m-1 or m-2 with m = " +
		                    std::to_string(m));
	}
	if (du == m - 1) {
		// The hub's own star already shows every colour: u takes 1, its edges
		// take 2..m, and each edge sees all the others at u.
		TotalColouring colouring(graph, m);
		assign_checked(graph, colouring, vertex_of(u), 1, ctx);
		const auto& nb = graph.neighbours(u);
		for (std::size_t i = 1; i <= nb.size(); ++i) {
			assign_checked(graph, colouring, edge_of(graph, u, nb[i - 1], ctx),
			               static_cast<int>(i) + 1, ctx);
		}
		greedy_complete(graph, colouring, completion_order(graph, decomposition), ctx);
		expect_valid(graph, colouring, ctx);
		return colouring;
	}
	for (int v = 0; v < graph.vertex_count(); ++v) {
		if (v == u || !is_dense(graph, m, vertex_of(v))) continue;
		try {
			return attempt_pendant_case2(graph, decomposition, m, u, v);
		} catch (const StructuralError&) {
		} catch (const InternalError&) {
		}
	}
	return std::nullopt;
}

std::optional<TotalColouring> colour_single_dense_path(
    const Graph& graph, const CaterpillarDecomposition& decomposition, const DensePath& path) {
	const int m = total_m_degree(graph);
	const std::string ctx = "single dense path construction";

	// Leftmost window of the path holding exactly m dense elements.
	int window_first = -1, window_last = -1;
	for (int a = path.first; a <= path.last && window_first < 0; ++a) {
		for (int b = a; b <= path.last; ++b) {
			if (count_dense_in_interval(graph, decomposition, m, a, b) == m) {
				window_first = a;
				window_last = b;
				break;
			}
		}
	}
	if (window_first < 0) return std::nullopt;

	DensePath window;
	window.first = window_first;
	window.last = window_last;
	for (int i = window_first; i <= window_last; ++i) {
		window.vertices.push_back(decomposition.spine[i]);
	}
	window.left_dense = is_dense(graph, m, vertex_of(decomposition.spine[window_first]));
	window.right_dense = is_dense(graph, m, vertex_of(decomposition.spine[window_last]));
	window.dense_count = m;
	if (window.left_dense && window.right_dense) {
		window.type = DensePathType::One;
	} else if (window.left_dense || window.right_dense) {
		window.type = DensePathType::Two;
	} else {
		window.type = DensePathType::Three;
	}

	TotalColouring colouring(graph, m);
	switch (window.type) {
		case DensePathType::One:
			colour_dense_path_type1(graph, decomposition, window, colouring);
			break;
		case DensePathType::Two:
			colour_dense_path_type2(graph, decomposition, window, colouring);
			break;
		case DensePathType::Three:
			colour_dense_path_type3(graph, decomposition, window, colouring);
			break;
	}
	greedy_complete(graph, colouring, completion_order(graph, decomposition), ctx);
	expect_valid(graph, colouring, ctx);
	return colouring;
}

namespace {

// Disconnected inputs are accepted only when every component is a star; the
// colouring applies each star's closed form inside the palette of the
// largest.  Note the result is a valid total b-chromatic colouring for that
// palette, which the library documents as the supported convention for star
// forests (it is not always the maximum over such forests).
SolveOutcome solve_star_forest(const Graph& graph,
                               const std::vector<std::vector<int>>& components) {
	const std::string ctx = "star forest colouring";
	int k = 0;
	for (const auto& component : components) {
		const int size = static_cast<int>(component.size());
		int best = -1;
		for (int v : component) best = std::max(best, graph.degree(v));
		if (best != size - 1) {
			throw InputError(
			    "disconnected input is supported only when every component is a star; "
			    "component containing vertex " +
			    std::to_string(component[0]) + " is not one");
		}
		k = std::max(k, size == 2 ? 3 : size);
	}
	TotalColouring colouring(graph, k);
	for (const auto& component : components) {
		int centre = component[0], best = -1;
		for (int v : component) {
			if (graph.degree(v) > best) {
				best = graph.degree(v);
				centre = v;
			}
		}
		if (component.size() == 1) {
			assign_checked(graph, colouring, vertex_of(centre), 1, ctx);
			continue;
		}
		assign_checked(graph, colouring, vertex_of(centre), 1, ctx);
		const auto& spokes = graph.neighbours(centre);
		const int n = static_cast<int>(spokes.size());
		for (int i = 1; i <= n; ++i) {
			assign_checked(graph, colouring, edge_of(graph, centre, spokes[i - 1], ctx), i + 1,
			               ctx);
		}
		for (int i = 1; i <= n; ++i) {
			// The last leaf wraps to colour 2 so the spoke edges see every
			// colour; a single-spoke component has no room to wrap and takes
			// colour 3, as in the two-vertex path closed form.
			const int colour = (n == 1) ? 3 : (i == n) ? 2 : i + 2;
			assign_checked(graph, colouring, vertex_of(spokes[i - 1]), colour, ctx);
		}
	}
	expect_valid(graph, colouring, ctx);
	SolveOutcome out;
	out.method = SolveMethod::ClosedFormStar;
	out.phi = k;
	out.colouring = colouring;
	out.certificate =
	    "star forest: each component coloured by the star closed form inside the largest "
	    "component's palette (documented convention for disconnected input)";
	return out;
}

SolveOutcome fallback_outcome(const Graph& graph, const SolveOptions& options,
                              const std::string& diagnostic) {
	if (options.allow_fallback_exact && graph.element_count() <= options.exact.element_cap) {
		const ExactResult result = solve_exact(graph, options.exact);
		SolveOutcome out;
		out.method = SolveMethod::FallbackExact;
		out.phi = result.phi;
		out.colouring = result.colouring;
		out.certificate = diagnostic + "; answered by exact search";
		return out;
	}
	SolveOutcome out;
	out.method = SolveMethod::OutsideTheoremScope;
	out.certificate = diagnostic;
	return out;
}

}  // namespace

SolveOutcome solve(const Graph& graph, const SolveOptions& options) {
	if (graph.vertex_count() == 0) {
		throw InputError("solve requires a non-empty graph");
	}
	const auto components = graph.components();
	if (components.size() > 1) {
		return solve_star_forest(graph, components);
	}

	const auto outcome = decompose_caterpillar(graph);
	if (const auto* failure = std::get_if<NotCaterpillar>(&outcome)) {
		throw InputError("solve requires a caterpillar: " + failure->detail);
	}
	const auto& decomposition = std::get<CaterpillarDecomposition>(outcome);
	const int m = total_m_degree(graph);

	SolveOutcome out;
	if (is_path_shape(graph)) {
		out.method = SolveMethod::ClosedFormPath;
		out.colouring = colour_path(graph);
		out.phi = out.colouring->k();
		if (*out.phi != m) {
			throw InternalError("path closed form disagrees with the total m-degree");
		}
		out.certificate = "path: the closed form attains the total m-degree " + std::to_string(m);
		return out;
	}
	if (is_star_shape(graph)) {
		out.method = SolveMethod::ClosedFormStar;
		out.colouring = colour_star(graph);
		out.phi = out.colouring->k();
		if (*out.phi != m) {
			throw InternalError("star closed form disagrees with the total m-degree");
		}
		out.certificate = "star: centre plus spoke edges witness all " + std::to_string(m) +
		                  " colours";
		return out;
	}
	if (m <= 5) {
		out.method = SolveMethod::SmallMDegree;
		out.colouring = colour_small_m_degree(graph, decomposition);
		out.phi = m;
		out.certificate = "total m-degree " + std::to_string(m) +
		                  " <= 5 is always attained by the case construction";
		return out;
	}

	const PivotClassification classification = classify_pivoted(graph, decomposition);
	if (!std::holds_alternative<NotPivoted>(classification)) {
		out.method = SolveMethod::PivotedMinusOne;
		out.colouring = colour_pivoted(graph, decomposition, classification);
		out.phi = m - 1;
		if (const auto* p1 = std::get_if<PivotType1>(&classification)) {
			out.certificate = describe(*p1);
		} else {
			out.certificate = describe(std::get<PivotType2>(classification));
		}
		out.certificate += "; optimum is m_t - 1 = " + std::to_string(m - 1);
		return out;
	}

	const int hub = dense_pendant_hub(graph, m);
	if (hub >= 0) {
		auto colouring = colour_dense_outside_spine(graph, decomposition);
		if (colouring) {
			out.method = SolveMethod::DenseOutsideSpine;
			out.colouring = std::move(*colouring);
			out.phi = m;
			out.certificate = "dense pendant edge at spine vertex " + std::to_string(hub) +
			                  ": the total m-degree " + std::to_string(m) + " is attained";
			return out;
		}
		return fallback_outcome(graph, options,
		                        "dense pendant edge construction found no companion dense vertex");
	}

	const auto paths = find_dense_paths(graph, decomposition);
	if (paths.size() == 1) {
		auto colouring = colour_single_dense_path(graph, decomposition, paths[0]);
		if (colouring) {
			out.method = SolveMethod::SingleDensePath;
			out.colouring = std::move(*colouring);
			out.phi = m;
			out.certificate = "all dense elements lie on one spine dense path; a window with "
			                  "exactly m_t = " +
			                  std::to_string(m) + " dense elements hosts the witnesses";
			return out;
		}
		return fallback_outcome(graph, options,
		                        "no spine window holds exactly m_t dense elements");
	}
	return fallback_outcome(graph, options,
	                        std::to_string(paths.size()) +
	                            " maximal dense paths and the graph is not pivoted");
}

}  // namespace totalb
