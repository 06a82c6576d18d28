#include "totalb/reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "totalb/construct.hpp"
#include "totalb/errors.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/verify.hpp"

namespace totalb {

namespace {

void require_cubic_bipartite_connected(const Graph& source) {
	const int n = source.vertex_count();
	if (n == 0) throw InputError("gadget construction requires a non-empty source graph");
	if (!source.is_connected()) {
		throw InputError("gadget construction requires a connected source graph");
	}
	for (int v = 0; v < n; ++v) {
		if (source.degree(v) != 3) {
			throw InputError("gadget construction requires a 3-regular source graph; vertex " +
			                 std::to_string(v) + " has degree " +
			                 std::to_string(source.degree(v)));
		}
	}
	std::vector<int> side(n, -1);
	std::queue<int> queue;
	side[0] = 0;
	queue.push(0);
	while (!queue.empty()) {
		const int v = queue.front();
		queue.pop();
		for (int w : source.neighbours(v)) {
			if (side[w] < 0) {
				side[w] = 1 - side[v];
				queue.push(w);
			} else if (side[w] == side[v]) {
				throw InputError("gadget construction requires a bipartite source graph; edge " +
				                 std::to_string(v) + "-" + std::to_string(w) +
				                 " closes an odd cycle");
			}
		}
	}
}

// The three colours of {1, 2, 3, 4} other than i, ascending.
std::array<int, 3> complement_colours(int i) {
	std::array<int, 3> result{};
	int next = 0;
	for (int c = 1; c <= 4; ++c) {
		if (c != i) result[next++] = c;
	}
	return result;
}

void require_proper_total(const Graph& graph, const TotalColouring& colouring,
                          const std::string& what) {
	const VerificationReport report = verify(graph, colouring);
	if (!report.unassigned.empty()) {
		throw CertificateError(what + " leaves " + std::to_string(report.unassigned.size()) +
		                       " element(s) uncoloured");
	}
	if (!report.conflicts.empty()) {
		const auto& [x, y] = report.conflicts.front();
		throw CertificateError(what + " is not proper: " + to_string(x) + " and " + to_string(y) +
		                       " share a colour");
	}
}

}  // namespace

int ReductionGadget::leaf(int i, int j) const {
	return source_vertex_count + 4 + (i - 1) * (source_vertex_count + 3) + j;
}

ReductionGadget build_gadget(const Graph& source) {
	require_cubic_bipartite_connected(source);
	const int n = source.vertex_count();

	ReductionGadget gadget;
	gadget.source_vertex_count = n;
	gadget.source_edge_count = source.edge_count();
	gadget.hub = n;
	for (int i = 1; i <= 4; ++i) gadget.stars[i - 1] = n + i;

	Graph h(5 * n + 17);
	for (int e = 0; e < source.edge_count(); ++e) {
		const auto [a, b] = source.endpoints(e);
		h.add_edge(a, b);
	}
	for (int v = 0; v < n; ++v) h.add_edge(v, gadget.hub);
	for (int i = 1; i <= 4; ++i) h.add_edge(gadget.hub, gadget.stars[i - 1]);
	for (int i = 1; i <= 4; ++i) {
		for (int j = 1; j <= n + 3; ++j) {
			h.add_edge(gadget.stars[i - 1], gadget.leaf(i, j));
		}
	}
	gadget.h = std::move(h);
	return gadget;
}

TotalColouring lift_colouring(const ReductionGadget& gadget, const Graph& source,
                              const TotalColouring& source_colouring) {
	const std::string ctx = "gadget lift";
	const int n = gadget.source_vertex_count;
	if (source.vertex_count() != n || source.edge_count() != gadget.source_edge_count) {
		throw InputError(ctx + ": source graph does not match the gadget");
	}
	if (source_colouring.k() != 4) {
		throw InputError(ctx + ": expected a 4-colour palette, got " +
		                 std::to_string(source_colouring.k()));
	}
	require_proper_total(source, source_colouring, "the source colouring");

	const Graph& h = gadget.h;
	TotalColouring colouring(h, n + 9);
	for (int v = 0; v < n; ++v) {
		assign_checked(h, colouring, Element::vertex(v),
		               *source_colouring.colour(Element::vertex(v)), ctx);
	}
	for (int e = 0; e < gadget.source_edge_count; ++e) {
		assign_checked(h, colouring, Element::edge(e), *source_colouring.colour(Element::edge(e)),
		               ctx);
	}
	const auto edge_to = [&](int a, int b) {
		const auto id = h.edge_between(a, b);
		if (!id) throw InternalError(ctx + ": missing gadget edge");
		return Element::edge(*id);
	};
	for (int v = 0; v < n; ++v) {
		assign_checked(h, colouring, edge_to(v, gadget.hub), v + 5, ctx);
	}
	assign_checked(h, colouring, Element::vertex(gadget.hub), n + 5, ctx);
	for (int i = 1; i <= 4; ++i) {
		const int centre = gadget.stars[i - 1];
		assign_checked(h, colouring, edge_to(gadget.hub, centre), n + 5 + i, ctx);
		assign_checked(h, colouring, Element::vertex(centre), i, ctx);
		const auto [a, b, c] = complement_colours(i);
		for (int j = 1; j <= n; ++j) {
			assign_checked(h, colouring, Element::vertex(gadget.leaf(i, j)), a, ctx);
			assign_checked(h, colouring, edge_to(centre, gadget.leaf(i, j)), j + 4, ctx);
		}
		const std::array<int, 3> spare{a, b, c};
		for (int t = 0; t < 3; ++t) {
			assign_checked(h, colouring, Element::vertex(gadget.leaf(i, n + 1 + t)),
			               n + 5 + spare[t], ctx);
			assign_checked(h, colouring, edge_to(centre, gadget.leaf(i, n + 1 + t)), spare[t],
			               ctx);
		}
	}
	expect_valid(h, colouring, ctx);
	return colouring;
}

TotalColouring project_colouring(const ReductionGadget& gadget, const Graph& source,
                                 const TotalColouring& gadget_colouring) {
	const std::string ctx = "gadget projection";
	const int n = gadget.source_vertex_count;
	if (source.vertex_count() != n || source.edge_count() != gadget.source_edge_count) {
		throw InputError(ctx + ": source graph does not match the gadget");
	}
	if (gadget_colouring.k() != n + 9) {
		throw CertificateError(ctx + ": expected a palette of " + std::to_string(n + 9) +
		                       " colours, got " + std::to_string(gadget_colouring.k()));
	}
	const VerificationReport report = verify(gadget.h, gadget_colouring);
	if (report.verdict != Verdict::ValidTotalBChromatic) {
		throw CertificateError(ctx + ": the gadget colouring is not a valid total b-chromatic "
		                             "colouring (" +
		                       to_string(report.verdict) + ")");
	}

	std::set<int> used;
	std::vector<Element> restricted;
	restricted.reserve(n + gadget.source_edge_count);
	for (int v = 0; v < n; ++v) restricted.push_back(Element::vertex(v));
	for (int e = 0; e < gadget.source_edge_count; ++e) restricted.push_back(Element::edge(e));
	for (const Element& x : restricted) used.insert(*gadget_colouring.colour(x));
	if (used.size() != 4) {
		throw CertificateError(ctx + ": the restriction to the source graph uses " +
		                       std::to_string(used.size()) + " colours, expected exactly 4");
	}
	std::map<int, int> rename;
	int next = 1;
	for (int colour : used) rename[colour] = next++;

	TotalColouring projected(source, 4);
	for (const Element& x : restricted) {
		projected.set(x, rename.at(*gadget_colouring.colour(x)));
	}
	require_proper_total(source, projected, "the projected colouring");
	return projected;
}

}  // namespace totalb
