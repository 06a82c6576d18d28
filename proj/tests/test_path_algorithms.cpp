#include "doctest.h"

#include <vector>

#include "totalb/caterpillar.hpp"
#include "totalb/construct.hpp"
#include "totalb/dense_paths.hpp"
#include "totalb/errors.hpp"
#include "totalb/generators.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/path_algorithms.hpp"
#include "totalb/verify.hpp"

using namespace totalb;

namespace {

// Runs the backbone routine for the family's single dense path, checks the
// shared postconditions, then completes greedily and verifies the result.
void exercise_family(int k, DensePathType type) {
	const Graph g = make_minimal_dense_caterpillar(k, type);
	const auto d = decompose_caterpillar_or_throw(g);
	const auto paths = find_dense_paths(g, d);
	REQUIRE(paths.size() == 1);
	const DensePath& path = paths[0];
	const int q = path.dense_count;
	REQUIRE(q == total_m_degree(g));

	TotalColouring colouring(g, q);
	switch (type) {
		case DensePathType::One: colour_dense_path_type1(g, d, path, colouring); break;
		case DensePathType::Two: colour_dense_path_type2(g, d, path, colouring); break;
		case DensePathType::Three: colour_dense_path_type3(g, d, path, colouring); break;
	}
	CHECK_NOTHROW(assert_dense_path_postconditions(g, path, colouring, q, "test"));

	// Every dense element already sees all other colours, so any proper
	// completion keeps them as witnesses; the greedy one always exists
	// because non-dense elements have fewer than q - 1 total neighbours.
	greedy_complete(g, colouring, g.elements(), "test completion");
	CHECK(verify(g, colouring).verdict == Verdict::ValidTotalBChromatic);
}

}  // namespace

TEST_CASE("type-1 backbones witness 2k-1 colours for every k up to 12") {
	for (int k = 3; k <= 12; ++k) {
		CAPTURE(k);
		exercise_family(k, DensePathType::One);
	}
}

TEST_CASE("type-2 backbones witness 2k-2 colours for every k up to 12") {
	for (int k = 4; k <= 12; ++k) {
		CAPTURE(k);
		exercise_family(k, DensePathType::Two);
	}
}

TEST_CASE("type-3 backbones witness 2k-3 colours for every k up to 12") {
	for (int k = 5; k <= 12; ++k) {
		CAPTURE(k);
		exercise_family(k, DensePathType::Three);
	}
}

TEST_CASE("a spine vertex without enough pendants raises StructuralError") {
	// The 7-vertex path has a type-1 dense path on five spine vertices
	// (q = 9), but its vertices carry at most one pendant leaf each, far
	// short of the backbone's demand.
	const Graph g = make_path(7);
	const auto d = decompose_caterpillar_or_throw(g);
	const auto paths = find_dense_paths(g, d);
	REQUIRE(paths.size() == 1);
	REQUIRE(paths[0].type == DensePathType::One);
	REQUIRE(paths[0].dense_count == 9);
	TotalColouring colouring(g, 9);
	CHECK_THROWS_AS(colour_dense_path_type1(g, d, paths[0], colouring), StructuralError);
}

TEST_CASE("postcondition checker flags a broken backbone") {
	const Graph g = make_minimal_dense_caterpillar(4, DensePathType::One);
	const auto d = decompose_caterpillar_or_throw(g);
	const auto paths = find_dense_paths(g, d);
	REQUIRE(paths.size() == 1);
	TotalColouring colouring(g, paths[0].dense_count);
	colour_dense_path_type1(g, d, paths[0], colouring);
	// Swap one dense element's colour for a repeat: the bijection check
	// must fire.
	colouring.set(Element::vertex(d.spine[0]), *colouring.colour(Element::vertex(d.spine[1])));
	CHECK_THROWS_AS(
	    assert_dense_path_postconditions(g, paths[0], colouring, paths[0].dense_count, "test"),
	    InternalError);
}

TEST_CASE("backbones leave elements outside the dense path untouched") {
	const Graph g = make_minimal_dense_caterpillar(5, DensePathType::Three);
	const auto d = decompose_caterpillar_or_throw(g);
	const auto paths = find_dense_paths(g, d);
	REQUIRE(paths.size() == 1);
	TotalColouring colouring(g, paths[0].dense_count);
	colour_dense_path_type3(g, d, paths[0], colouring);
	CHECK(!colouring.is_complete());
	// Exactly the backbone elements and one pendant pair per demanded slot
	// are set; in particular some leaf of the family stays unassigned.
	int unassigned_leaves = 0;
	for (int v = 0; v < g.vertex_count(); ++v) {
		if (g.degree(v) == 1 && !colouring.is_assigned(Element::vertex(v))) ++unassigned_leaves;
	}
	CHECK(unassigned_leaves > 0);
}
