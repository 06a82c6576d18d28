#include "doctest.h"

#include <variant>
#include <vector>

#include "totalb/caterpillar.hpp"
#include "totalb/dense_paths.hpp"
#include "totalb/errors.hpp"
#include "totalb/generators.hpp"
#include "totalb/mdegree.hpp"

using namespace totalb;

namespace {

std::vector<DensePath> dense_paths_of(const Graph& g) {
	return find_dense_paths(g, decompose_caterpillar_or_throw(g));
}

}  // namespace

TEST_CASE("the minimal type-1 family forms one dense path spanning the spine") {
	for (int k = 3; k <= 7; ++k) {
		CAPTURE(k);
		const Graph g = make_minimal_dense_caterpillar(k, DensePathType::One);
		CHECK(total_m_degree(g) == 2 * k - 1);
		const auto paths = dense_paths_of(g);
		REQUIRE(paths.size() == 1);
		const DensePath& p = paths[0];
		CHECK(p.type == DensePathType::One);
		CHECK(p.length() == k);
		CHECK(p.dense_count == 2 * k - 1);
		CHECK(p.first == 0);
		CHECK(p.last == k - 1);
		CHECK(p.left_dense);
		CHECK(p.right_dense);
	}
}

TEST_CASE("the minimal type-2 family is dense only at its left boundary") {
	for (int k = 4; k <= 7; ++k) {
		CAPTURE(k);
		const Graph g = make_minimal_dense_caterpillar(k, DensePathType::Two);
		CHECK(total_m_degree(g) == 2 * k - 2);
		const auto paths = dense_paths_of(g);
		REQUIRE(paths.size() == 1);
		const DensePath& p = paths[0];
		CHECK(p.type == DensePathType::Two);
		CHECK(p.length() == k);
		CHECK(p.dense_count == 2 * k - 2);
		CHECK(p.left_dense);
		CHECK(!p.right_dense);
	}
}

TEST_CASE("the minimal type-3 family is dense at neither boundary") {
	for (int k = 5; k <= 8; ++k) {
		CAPTURE(k);
		const Graph g = make_minimal_dense_caterpillar(k, DensePathType::Three);
		CHECK(total_m_degree(g) == 2 * k - 3);
		const auto paths = dense_paths_of(g);
		REQUIRE(paths.size() == 1);
		const DensePath& p = paths[0];
		CHECK(p.type == DensePathType::Three);
		CHECK(p.length() == k);
		CHECK(p.dense_count == 2 * k - 3);
		CHECK(!p.left_dense);
		CHECK(!p.right_dense);
	}
}

TEST_CASE("count_dense_in_interval counts the window, not the whole spine") {
	const Graph g = make_minimal_dense_caterpillar(4, DensePathType::One);
	const auto d = decompose_caterpillar_or_throw(g);
	const int m = total_m_degree(g);
	CHECK(count_dense_in_interval(g, d, m, 0, 3) == 7);
	CHECK(count_dense_in_interval(g, d, m, 0, 1) == 3);  // two vertices + one edge
	CHECK(count_dense_in_interval(g, d, m, 2, 2) == 1);
}

TEST_CASE("two maximal dense paths may share a non-dense boundary vertex") {
	const Graph g = make_pivoted_shared_caterpillar();
	const auto d = decompose_caterpillar_or_throw(g);
	CHECK(d.spine == std::vector<int>{1, 2, 3, 4, 5});
	const auto paths = find_dense_paths(g, d);
	REQUIRE(paths.size() == 2);
	CHECK(paths[0].vertices == std::vector<int>{1, 2, 3});
	CHECK(paths[1].vertices == std::vector<int>{3, 4, 5});
	CHECK(paths[0].type == DensePathType::Three);
	CHECK(paths[1].type == DensePathType::Three);
	CHECK(paths[0].dense_count == 3);
	CHECK(paths[1].dense_count == 3);
}

TEST_CASE("classify_pivoted finds the hub shape") {
	for (int m = 7; m <= 10; ++m) {
		CAPTURE(m);
		const Graph g = make_pivoted_hub_caterpillar(m);
		REQUIRE(total_m_degree(g) == m);
		const auto c = classify_pivoted(g, decompose_caterpillar_or_throw(g));
		REQUIRE(std::holds_alternative<PivotType1>(c));
		const auto& pivot = std::get<PivotType1>(c);
		CHECK(pivot.u == 0);
		CHECK(pivot.u_prime == 1);
		CHECK(pivot.v == 2);
		CHECK(g.degree(pivot.u) == m - 2);
		CHECK(g.degree(pivot.u_prime) == 2);
	}
}

TEST_CASE("classify_pivoted finds the shared-vertex twin-path shape") {
	const Graph g = make_pivoted_shared_caterpillar();
	REQUIRE(total_m_degree(g) == 6);
	const auto c = classify_pivoted(g, decompose_caterpillar_or_throw(g));
	REQUIRE(std::holds_alternative<PivotType2>(c));
	const auto& pivot = std::get<PivotType2>(c);
	CHECK(pivot.first.vertices == std::vector<int>{1, 2, 3});
	CHECK(pivot.second.vertices == std::vector<int>{3, 4, 5});
	CHECK(pivot.connector == std::vector<int>{3});
}

TEST_CASE("classify_pivoted finds the bridged twin-path shape") {
	const Graph g = make_pivoted_bridged_caterpillar();
	REQUIRE(total_m_degree(g) == 6);
	const auto c = classify_pivoted(g, decompose_caterpillar_or_throw(g));
	REQUIRE(std::holds_alternative<PivotType2>(c));
	const auto& pivot = std::get<PivotType2>(c);
	CHECK(pivot.first.vertices == std::vector<int>{1, 2, 3});
	CHECK(pivot.second.vertices == std::vector<int>{4, 5, 6});
	CHECK(pivot.connector == std::vector<int>{3, 4});
}

TEST_CASE("classify_pivoted reports non-pivoted shapes with a reason") {
	// Exactly m dense elements, but a single dense path: not pivoted.
	const Graph one_path = make_minimal_dense_caterpillar(4, DensePathType::One);
	const auto c1 =
	    classify_pivoted(one_path, decompose_caterpillar_or_throw(one_path));
	REQUIRE(std::holds_alternative<NotPivoted>(c1));
	CHECK(std::get<NotPivoted>(c1).dense_count_is_m);

	// More dense elements than m: the pivot definitions do not even apply.
	const Graph crowded = make_uniform_caterpillar(5, 2);
	REQUIRE(total_m_degree(crowded) == 7);
	const auto c2 = classify_pivoted(crowded, decompose_caterpillar_or_throw(crowded));
	REQUIRE(std::holds_alternative<NotPivoted>(c2));
	CHECK(!std::get<NotPivoted>(c2).dense_count_is_m);
	CHECK(std::get<NotPivoted>(c2).diagnostic.find("dense elements") != std::string::npos);
}

TEST_CASE("classify_pivoted rejects small m-degrees") {
	const Graph g = make_path(9);  // m-degree 5
	CHECK_THROWS_AS(classify_pivoted(g, decompose_caterpillar_or_throw(g)), InputError);
}

TEST_CASE("dense path type names are stable") {
	CHECK(std::string(to_string(DensePathType::One)) == "type-1");
	CHECK(std::string(to_string(DensePathType::Two)) == "type-2");
	CHECK(std::string(to_string(DensePathType::Three)) == "type-3");
}
