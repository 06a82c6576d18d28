#include "totalb/mdegree.hpp"

#include <algorithm>
#include <functional>

#include "totalb/errors.hpp"

namespace totalb {

int total_m_degree(const Graph& graph) {
	if (graph.element_count() == 0) {
		throw InputError("total m-degree is undefined for a graph with no elements");
	}
	std::vector<int> degrees;
	degrees.reserve(graph.element_count());
	for (const Element& x : graph.elements()) degrees.push_back(graph.total_degree(x));
	std::sort(degrees.begin(), degrees.end(), std::greater<int>());
	// degrees is non-increasing while i - 1 increases, so the predicate
	// d_t(x_i) >= i - 1 holds on a prefix; m is the length of that prefix.
	int m = 0;
	for (int i = 1; i <= static_cast<int>(degrees.size()); ++i) {
		if (degrees[i - 1] >= i - 1) m = i;
	}
	return m;
}

bool is_dense(const Graph& graph, int m, const Element& x) {
	return graph.total_degree(x) >= m - 1;
}

bool is_tight(const Graph& graph, int m, const Element& x) {
	return graph.total_degree(x) == m - 1;
}

std::vector<Element> dense_elements(const Graph& graph) {
	const int m = total_m_degree(graph);
	std::vector<Element> result;
	for (const Element& x : graph.elements()) {
		if (is_dense(graph, m, x)) result.push_back(x);
	}
	return result;
}

}  // namespace totalb
