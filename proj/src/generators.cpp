#include "totalb/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "totalb/errors.hpp"

namespace totalb {

Graph make_path(int n) {
	if (n < 1) throw InputError("make_path requires at least one vertex");
	Graph graph(n);
	for (int i = 0; i + 1 < n; ++i) graph.add_edge(i, i + 1);
	return graph;
}

Graph make_star(int spokes) {
	if (spokes < 0) throw InputError("make_star requires a non-negative spoke count");
	Graph graph(spokes + 1);
	for (int i = 1; i <= spokes; ++i) graph.add_edge(0, i);
	return graph;
}

Graph make_caterpillar(const std::vector<int>& leaves_per_spine) {
	const int spine = static_cast<int>(leaves_per_spine.size());
	if (spine < 1) throw InputError("make_caterpillar requires at least one spine vertex");
	int total = spine;
	for (int count : leaves_per_spine) {
		if (count < 0) throw InputError("make_caterpillar requires non-negative leaf counts");
		total += count;
	}
	Graph graph(total);
	for (int i = 0; i + 1 < spine; ++i) graph.add_edge(i, i + 1);
	int next = spine;
	for (int i = 0; i < spine; ++i) {
		for (int j = 0; j < leaves_per_spine[i]; ++j) graph.add_edge(i, next++);
	}
	return graph;
}

Graph make_uniform_caterpillar(int spine, int leaves_each) {
	if (spine < 1) throw InputError("make_uniform_caterpillar requires at least one spine vertex");
	if (leaves_each < 0) {
		throw InputError("make_uniform_caterpillar requires a non-negative leaf count");
	}
	return make_caterpillar(std::vector<int>(spine, leaves_each));
}

Graph make_minimal_dense_caterpillar(int k, DensePathType type) {
	std::vector<int> leaves(static_cast<std::size_t>(std::max(k, 0)), 0);
	switch (type) {
		case DensePathType::One:
			if (k < 3) {
				throw InputError("a minimal dense caterpillar of type one needs k >= 3");
			}
			for (int i = 0; i < k; ++i) leaves[i] = (i == 0 || i == k - 1) ? k - 2 : k - 3;
			break;
		case DensePathType::Two:
			if (k < 4) {
				throw InputError("a minimal dense caterpillar of type two needs k >= 4");
			}
			for (int i = 0; i < k; ++i) leaves[i] = (i == 0) ? k - 2 : k - 3;
			break;
		case DensePathType::Three:
			if (k < 5) {
				throw InputError("a minimal dense caterpillar of type three needs k >= 5");
			}
			for (int i = 0; i < k; ++i) {
				leaves[i] = (i == 1 || i == k - 2) ? k - 3 : k - 4;
			}
			break;
	}
	return make_caterpillar(leaves);
}

Graph make_pivoted_hub_caterpillar(int m) {
	if (m < 7) {
		throw InputError("the pivoted hub shape needs total m-degree at least 7, got " +
		                 std::to_string(m));
	}
	// Spine u(0) -- u'(1) -- v(2); the hub u carries m-3 leaves for degree
	// m-2, and v carries m-5 leaves for degree m-4: dense, but with no dense
	// edge of its own.
	Graph graph(2 * m - 5);
	graph.add_edge(0, 1);
	graph.add_edge(1, 2);
	int next = 3;
	for (int j = 0; j < m - 3; ++j) graph.add_edge(0, next++);
	for (int j = 0; j < m - 5; ++j) graph.add_edge(2, next++);
	return graph;
}

Graph make_pivoted_shared_caterpillar() {
	// Spine 0..6 with leaves 7 on vertex 2 and 8 on vertex 4: the dense paths
	// [1..3] and [3..5] share the non-dense vertex 3.
	Graph graph(9);
	for (int i = 0; i < 6; ++i) graph.add_edge(i, i + 1);
	graph.add_edge(2, 7);
	graph.add_edge(4, 8);
	return graph;
}

Graph make_pivoted_bridged_caterpillar() {
	// Spine 0..7 with leaves 8 on vertex 2 and 9 on vertex 5: the dense paths
	// [1..3] and [4..6] are joined by the non-dense edge 3-4.
	Graph graph(10);
	for (int i = 0; i < 7; ++i) graph.add_edge(i, i + 1);
	graph.add_edge(2, 8);
	graph.add_edge(5, 9);
	return graph;
}

Graph make_random_caterpillar(std::uint64_t seed, int max_n) {
	if (max_n < 2) throw InputError("make_random_caterpillar requires max_n >= 2");
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> spine_dist(2, std::max(2, max_n / 2));
	const int spine = spine_dist(rng);
	int budget = max_n - spine;
	std::vector<int> leaves(static_cast<std::size_t>(spine), 0);
	for (int i = 0; i < spine; ++i) {
		if (budget <= 0) break;
		std::uniform_int_distribution<int> leaf_dist(0, std::min(budget, 3));
		leaves[i] = leaf_dist(rng);
		budget -= leaves[i];
	}
	return make_caterpillar(leaves);
}

Graph make_cube() {
	Graph graph(8);
	for (int v = 0; v < 8; ++v) {
		for (int bit = 0; bit < 3; ++bit) {
			const int w = v ^ (1 << bit);
			if (v < w) graph.add_edge(v, w);
		}
	}
	return graph;
}

}  // namespace totalb
