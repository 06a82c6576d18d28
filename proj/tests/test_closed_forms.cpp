#include "doctest.h"

#include <vector>

#include "totalb/closed_forms.hpp"
#include "totalb/errors.hpp"
#include "totalb/generators.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/verify.hpp"

using namespace totalb;

namespace {

int expected_path_m(int n) {
	if (n == 1) return 1;
	if (n <= 3) return 3;
	if (n == 4) return 4;
	return 5;
}

}  // namespace

TEST_CASE("total m-degree of paths follows the closed form") {
	for (int n = 1; n <= 12; ++n) {
		CAPTURE(n);
		CHECK(total_m_degree(make_path(n)) == expected_path_m(n));
	}
}

TEST_CASE("total m-degree of stars follows the closed form") {
	// K_{1,n} has m-degree n + 1 from two spokes on; one spoke is the
	// two-vertex path with m-degree 3.
	CHECK(total_m_degree(make_star(1)) == 3);
	for (int spokes = 2; spokes <= 8; ++spokes) {
		CAPTURE(spokes);
		CHECK(total_m_degree(make_star(spokes)) == spokes + 1);
	}
}

TEST_CASE("total m-degree rejects an empty graph") {
	CHECK_THROWS_AS(total_m_degree(Graph(0)), InputError);
}

TEST_CASE("dense and tight elements of a long path") {
	const Graph g = make_path(9);
	const int m = total_m_degree(g);
	REQUIRE(m == 5);
	// Interior vertices and interior edges have total degree 4 = m - 1:
	// dense and tight.  End vertices (2) and end edges (3) are not dense.
	CHECK(is_dense(g, m, Element::vertex(1)));
	CHECK(is_tight(g, m, Element::vertex(1)));
	CHECK(!is_dense(g, m, Element::vertex(0)));
	CHECK(is_dense(g, m, Element::edge(3)));
	CHECK(!is_dense(g, m, Element::edge(0)));
	const auto dense = dense_elements(g);
	CHECK(static_cast<int>(dense.size()) == 13);  // 7 interior vertices + 6 interior edges
	CHECK(static_cast<int>(dense.size()) >= m);
}

TEST_CASE("a star's dense elements are the centre and its spokes") {
	const Graph g = make_star(3);
	const int m = total_m_degree(g);
	REQUIRE(m == 4);
	const auto dense = dense_elements(g);
	REQUIRE(dense.size() == 4);
	CHECK(dense[0] == Element::vertex(0));  // centre, d_t = 6
	CHECK(dense[1] == Element::edge(0));    // spokes, d_t = 4 = m, no tight elements
	CHECK(!is_tight(g, m, Element::edge(0)));
	CHECK(!is_dense(g, m, Element::vertex(1)));
}

TEST_CASE("every graph has at least m dense elements") {
	std::vector<Graph> graphs;
	for (int n = 1; n <= 9; ++n) graphs.push_back(make_path(n));
	for (int s = 1; s <= 6; ++s) graphs.push_back(make_star(s));
	graphs.push_back(make_uniform_caterpillar(4, 2));
	graphs.push_back(make_pivoted_shared_caterpillar());
	graphs.push_back(make_cube());
	for (const auto& g : graphs) {
		CAPTURE(g.vertex_count());
		CHECK(static_cast<int>(dense_elements(g).size()) >= total_m_degree(g));
	}
}

TEST_CASE("colour_path is optimal and valid for every small length") {
	for (int n = 1; n <= 12; ++n) {
		CAPTURE(n);
		const Graph g = make_path(n);
		const TotalColouring c = colour_path(g);
		CHECK(c.k() == expected_path_m(n));
		CHECK(verify(g, c).verdict == Verdict::ValidTotalBChromatic);
	}
}

TEST_CASE("colour_path emits the documented small patterns") {
	const Graph g3 = make_path(3);
	const TotalColouring c3 = colour_path(g3);
	// Walk order v e v e v gets 1 2 3 1 2.
	CHECK(c3.colour(Element::vertex(0)) == 1);
	CHECK(c3.colour(Element::edge(0)) == 2);
	CHECK(c3.colour(Element::vertex(1)) == 3);
	CHECK(c3.colour(Element::edge(1)) == 1);
	CHECK(c3.colour(Element::vertex(2)) == 2);

	const Graph g4 = make_path(4);
	const TotalColouring c4 = colour_path(g4);
	CHECK(c4.colour(Element::vertex(0)) == 1);
	CHECK(c4.colour(Element::edge(0)) == 2);
	CHECK(c4.colour(Element::vertex(1)) == 3);
	CHECK(c4.colour(Element::edge(1)) == 4);
	CHECK(c4.colour(Element::vertex(2)) == 1);
	CHECK(c4.colour(Element::edge(2)) == 2);
	CHECK(c4.colour(Element::vertex(3)) == 4);
}

TEST_CASE("colour_path ignores vertex labelling") {
	// The same 6-vertex path as 0-5-4-3-2-1; the walk starts at the
	// degree-1 vertex with the smaller id.
	Graph g(6);
	g.add_edge(0, 5);
	g.add_edge(5, 4);
	g.add_edge(4, 3);
	g.add_edge(3, 2);
	g.add_edge(2, 1);
	const TotalColouring c = colour_path(g);
	CHECK(c.k() == 5);
	CHECK(verify(g, c).verdict == Verdict::ValidTotalBChromatic);
}

TEST_CASE("colour_path rejects non-paths") {
	CHECK_THROWS_AS(colour_path(make_star(3)), InputError);
	Graph cycle(3);
	cycle.add_edge(0, 1);
	cycle.add_edge(1, 2);
	cycle.add_edge(2, 0);
	CHECK_THROWS_AS(colour_path(cycle), InputError);
}

TEST_CASE("colour_star is optimal and valid for every small spoke count") {
	for (int spokes = 1; spokes <= 8; ++spokes) {
		CAPTURE(spokes);
		const Graph g = make_star(spokes);
		const TotalColouring c = colour_star(g);
		CHECK(c.k() == (spokes == 1 ? 3 : spokes + 1));
		CHECK(verify(g, c).verdict == Verdict::ValidTotalBChromatic);
	}
}

TEST_CASE("colour_star uses the centre-first pattern") {
	const Graph g = make_star(3);
	const TotalColouring c = colour_star(g);
	CHECK(c.colour(Element::vertex(0)) == 1);
	CHECK(c.colour(Element::edge(0)) == 2);
	CHECK(c.colour(Element::edge(1)) == 3);
	CHECK(c.colour(Element::edge(2)) == 4);
	// Leaves shift up by one spoke, with the last one wrapping to 2 so that
	// every spoke edge still sees all other colours.
	CHECK(c.colour(Element::vertex(1)) == 3);
	CHECK(c.colour(Element::vertex(2)) == 4);
	CHECK(c.colour(Element::vertex(3)) == 2);
}

TEST_CASE("colour_star rejects non-stars") {
	CHECK_THROWS_AS(colour_star(make_path(4)), InputError);
	Graph split(4);
	split.add_edge(0, 1);
	split.add_edge(2, 3);
	CHECK_THROWS_AS(colour_star(split), InputError);
}
