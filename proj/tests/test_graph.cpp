#include "doctest.h"

#include <vector>

#include "totalb/errors.hpp"
#include "totalb/graph.hpp"

using namespace totalb;

namespace {

Graph path4() {
	Graph g(4);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(2, 3);
	return g;
}

}  // namespace

TEST_CASE("graph construction and basic queries") {
	Graph g = path4();
	CHECK(g.vertex_count() == 4);
	CHECK(g.edge_count() == 3);
	CHECK(g.degree(0) == 1);
	CHECK(g.degree(1) == 2);
	CHECK(g.max_degree() == 2);
	CHECK(g.neighbours(1) == std::vector<int>{0, 2});
	CHECK(g.incident_edges(1) == std::vector<int>{0, 1});
	CHECK(g.endpoints(1) == std::pair<int, int>{1, 2});
	CHECK(g.edge_between(2, 1) == 1);
	CHECK(!g.edge_between(0, 3).has_value());
	CHECK(g.is_connected());
	CHECK(g.is_tree());
}

TEST_CASE("add_edge rejects bad input") {
	Graph g(3);
	g.add_edge(0, 1);
	CHECK_THROWS_AS(g.add_edge(1, 1), InputError);   // self-loop
	CHECK_THROWS_AS(g.add_edge(1, 0), InputError);   // duplicate
	CHECK_THROWS_AS(g.add_edge(0, 3), InputError);   // out of range
	CHECK_THROWS_AS(g.add_edge(-1, 2), InputError);  // out of range
	CHECK(g.edge_count() == 1);
}

TEST_CASE("components and tree detection") {
	Graph g(5);
	g.add_edge(0, 1);
	g.add_edge(2, 3);
	CHECK(!g.is_connected());
	CHECK(!g.is_tree());
	const auto components = g.components();
	REQUIRE(components.size() == 3);
	CHECK(components[0] == std::vector<int>{0, 1});
	CHECK(components[1] == std::vector<int>{2, 3});
	CHECK(components[2] == std::vector<int>{4});

	Graph cycle(3);
	cycle.add_edge(0, 1);
	cycle.add_edge(1, 2);
	cycle.add_edge(0, 2);
	CHECK(cycle.is_connected());
	CHECK(!cycle.is_tree());
}

TEST_CASE("total degree of vertices and edges") {
	Graph g = path4();
	CHECK(g.total_degree(Element::vertex(0)) == 2);  // 2 * deg
	CHECK(g.total_degree(Element::vertex(1)) == 4);
	CHECK(g.total_degree(Element::edge(0)) == 3);  // deg(0) + deg(1)
	CHECK(g.total_degree(Element::edge(1)) == 4);  // deg(1) + deg(2)
}

TEST_CASE("total neighbourhood is canonical and matches total adjacency") {
	Graph g = path4();
	const auto around_v1 = g.total_neighbourhood(Element::vertex(1));
	CHECK(around_v1 == std::vector<Element>{Element::vertex(0), Element::vertex(2),
	                                        Element::edge(0), Element::edge(1)});
	const auto around_e1 = g.total_neighbourhood(Element::edge(1));
	CHECK(around_e1 == std::vector<Element>{Element::vertex(1), Element::vertex(2),
	                                        Element::edge(0), Element::edge(2)});
	for (const Element& x : g.elements()) {
		for (const Element& y : g.elements()) {
			const bool adjacent = g.total_adjacent(x, y);
			CHECK(adjacent == g.total_adjacent(y, x));
			if (x == y) CHECK(!adjacent);
		}
	}
}

TEST_CASE("elements come in canonical order") {
	Graph g = path4();
	const auto elements = g.elements();
	REQUIRE(g.element_count() == 7);
	REQUIRE(elements.size() == 7);
	CHECK(elements[0] == Element::vertex(0));
	CHECK(elements[3] == Element::vertex(3));
	CHECK(elements[4] == Element::edge(0));
	CHECK(elements[6] == Element::edge(2));
}

TEST_CASE("total graph of the three-vertex path") {
	Graph g(3);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	const Graph total = g.total_graph();
	// Elements: v0, v1, v2, e0, e1.  Adjacencies: v0-v1, v1-v2 (vertex pairs),
	// v0-e0, v1-e0, v1-e1, v2-e1 (incidences), e0-e1 (shared endpoint).
	CHECK(total.vertex_count() == 5);
	CHECK(total.edge_count() == 7);
	CHECK(total.edge_between(0, 1).has_value());   // v0 - v1
	CHECK(total.edge_between(3, 4).has_value());   // e0 - e1
	CHECK(total.edge_between(0, 4) == std::nullopt);  // v0 and e1 are not adjacent
	CHECK(total.degree(1) == 4);                   // v1 sees both vertices and both edges
}

TEST_CASE("total graph degree equals total degree") {
	Graph g = path4();
	const Graph total = g.total_graph();
	for (int v = 0; v < g.vertex_count(); ++v) {
		CHECK(total.degree(v) == g.total_degree(Element::vertex(v)));
	}
	for (int e = 0; e < g.edge_count(); ++e) {
		CHECK(total.degree(g.vertex_count() + e) == g.total_degree(Element::edge(e)));
	}
}
