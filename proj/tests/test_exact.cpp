#include "doctest.h"

#include "totalb/errors.hpp"
#include "totalb/exact.hpp"
#include "totalb/generators.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/verify.hpp"

using namespace totalb;

TEST_CASE("solve_exact matches the known optima of small paths") {
	const int expected[] = {0, 1, 3, 3, 4, 5, 5};  // indexed by vertex count
	for (int n = 1; n <= 6; ++n) {
		CAPTURE(n);
		const Graph g = make_path(n);
		const ExactResult result = solve_exact(g);
		CHECK(result.phi == expected[n]);
		CHECK(result.colouring.k() == expected[n]);
		CHECK(verify(g, result.colouring).verdict == Verdict::ValidTotalBChromatic);
		CHECK(static_cast<int>(result.witnesses.size()) == result.phi);
		CHECK(result.nodes_explored > 0);
	}
}

TEST_CASE("solve_exact matches the known optima of small stars") {
	for (int spokes = 1; spokes <= 4; ++spokes) {
		CAPTURE(spokes);
		const Graph g = make_star(spokes);
		const ExactResult result = solve_exact(g);
		CHECK(result.phi == (spokes == 1 ? 3 : spokes + 1));
		CHECK(verify(g, result.colouring).verdict == Verdict::ValidTotalBChromatic);
	}
}

TEST_CASE("solve_exact never beats the m-degree bound") {
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		const Graph g = make_random_caterpillar(seed, 8);
		CAPTURE(seed);
		CHECK(solve_exact(g).phi <= total_m_degree(g));
	}
}

TEST_CASE("solve_exact is deterministic") {
	const Graph g = make_uniform_caterpillar(3, 1);
	const ExactResult a = solve_exact(g);
	const ExactResult b = solve_exact(g);
	CHECK(a.phi == b.phi);
	CHECK(a.colouring == b.colouring);
	CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("solve_exact refuses graphs above the element cap") {
	ExactOptions options;
	options.element_cap = 10;
	CHECK_THROWS_AS(solve_exact(make_path(6), options), InputError);  // 11 elements
	CHECK_THROWS_AS(solve_exact(make_path(21)), InputError);          // 41 > default 40
}

TEST_CASE("solve_exact reports bounds when the node budget runs out") {
	ExactOptions options;
	options.node_budget = 1;
	try {
		solve_exact(make_star(4), options);
		FAIL("expected BudgetExceeded");
	} catch (const BudgetExceeded& e) {
		CHECK(e.lower_bound == 1);
		CHECK(e.upper_bound == 5);  // the m-degree, where the search starts
	}
}

TEST_CASE("exists_total_k_colouring finds and refuses correctly") {
	// The middle vertex of a three-vertex path and its two edges are
	// pairwise adjacent in the total sense: two colours cannot work.
	CHECK(!exists_total_k_colouring(make_path(3), 2).has_value());

	const auto c3 = exists_total_k_colouring(make_path(3), 3);
	REQUIRE(c3.has_value());
	const auto report = verify(make_path(3), *c3);
	CHECK(report.conflicts.empty());
	CHECK(c3->is_complete());

	CHECK_THROWS_AS(exists_total_k_colouring(make_path(3), 0), InputError);
}

TEST_CASE("the cube graph admits a proper total colouring with four colours") {
	const Graph cube = make_cube();
	const auto colouring = exists_total_k_colouring(cube, 4);
	REQUIRE(colouring.has_value());
	CHECK(colouring->is_complete());
	CHECK(verify(cube, *colouring).conflicts.empty());
}
