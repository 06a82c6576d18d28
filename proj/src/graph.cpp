#include "totalb/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "totalb/errors.hpp"

namespace totalb {

std::string to_string(const Element& e) {
	return (e.is_vertex() ? "v" : "e") + std::to_string(e.id);
}

Graph::Graph(int vertex_count) {
	if (vertex_count < 0) {
		throw InputError("vertex count must be non-negative, got " + std::to_string(vertex_count));
	}
	adjacent_.resize(vertex_count);
	incident_.resize(vertex_count);
}

void Graph::check_vertex(int v) const {
	if (v < 0 || v >= vertex_count()) {
		throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
		                 std::to_string(vertex_count()) + ")");
	}
}

int Graph::add_edge(int u, int v) {
	check_vertex(u);
	check_vertex(v);
	if (u == v) {
		throw InputError("self-loop at vertex " + std::to_string(u) + " is not allowed");
	}
	if (edge_between(u, v)) {
		throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
	}
	if (u > v) std::swap(u, v);
	const int id = edge_count();
	endpoints_.emplace_back(u, v);
	for (int w : {u, v}) {
		auto& adj = adjacent_[w];
		const int other = (w == u) ? v : u;
		adj.insert(std::lower_bound(adj.begin(), adj.end(), other), other);
		incident_[w].push_back(id);  // edge ids are inserted in increasing order
	}
	return id;
}

std::pair<int, int> Graph::endpoints(int edge_id) const {
	if (edge_id < 0 || edge_id >= edge_count()) {
		throw InputError("edge id " + std::to_string(edge_id) + " out of range [0, " +
		                 std::to_string(edge_count()) + ")");
	}
	return endpoints_[edge_id];
}

int Graph::degree(int v) const {
	check_vertex(v);
	return static_cast<int>(adjacent_[v].size());
}

int Graph::max_degree() const {
	int best = 0;
	for (const auto& adj : adjacent_) best = std::max(best, static_cast<int>(adj.size()));
	return best;
}

const std::vector<int>& Graph::neighbours(int v) const {
	check_vertex(v);
	return adjacent_[v];
}

const std::vector<int>& Graph::incident_edges(int v) const {
	check_vertex(v);
	return incident_[v];
}

std::optional<int> Graph::edge_between(int u, int v) const {
	check_vertex(u);
	check_vertex(v);
	if (degree(u) > degree(v)) std::swap(u, v);
	for (int e : incident_[u]) {
		const auto [a, b] = endpoints_[e];
		if (a + b == u + v && (a == u || a == v)) return e;
	}
	return std::nullopt;
}

std::vector<std::vector<int>> Graph::components() const {
	std::vector<int> label(vertex_count(), -1);
	std::vector<std::vector<int>> result;
	for (int s = 0; s < vertex_count(); ++s) {
		if (label[s] != -1) continue;
		const int id = static_cast<int>(result.size());
		result.emplace_back();
		std::queue<int> queue;
		queue.push(s);
		label[s] = id;
		while (!queue.empty()) {
			const int v = queue.front();
			queue.pop();
			result[id].push_back(v);
			for (int w : adjacent_[v]) {
				if (label[w] == -1) {
					label[w] = id;
					queue.push(w);
				}
			}
		}
	}
	return result;
}

bool Graph::is_connected() const {
	if (vertex_count() == 0) return true;
	return components().size() == 1;
}

bool Graph::is_tree() const {
	return vertex_count() > 0 && edge_count() == vertex_count() - 1 && is_connected();
}

std::vector<Element> Graph::elements() const {
	std::vector<Element> result;
	result.reserve(element_count());
	for (int v = 0; v < vertex_count(); ++v) result.push_back(Element::vertex(v));
	for (int e = 0; e < edge_count(); ++e) result.push_back(Element::edge(e));
	return result;
}

int Graph::total_degree(const Element& x) const {
	if (x.is_vertex()) {
		return 2 * degree(x.id);
	}
	const auto [u, v] = endpoints(x.id);
	return degree(u) + degree(v);
}

std::vector<Element> Graph::total_neighbourhood(const Element& x) const {
	std::vector<Element> result;
	if (x.is_vertex()) {
		result.reserve(2 * degree(x.id));
		for (int w : neighbours(x.id)) result.push_back(Element::vertex(w));
		for (int e : incident_edges(x.id)) result.push_back(Element::edge(e));
		return result;
	}
	const auto [u, v] = endpoints(x.id);
	result.reserve(degree(u) + degree(v));
	result.push_back(Element::vertex(u));
	result.push_back(Element::vertex(v));
	std::vector<int> edges;
	edges.reserve(degree(u) + degree(v) - 2);
	for (int e : incident_edges(u)) {
		if (e != x.id) edges.push_back(e);
	}
	for (int e : incident_edges(v)) {
		if (e != x.id) edges.push_back(e);
	}
	std::sort(edges.begin(), edges.end());  // no duplicates: a simple graph has
	// at most one edge between any two vertices, so no other edge shares both
	// endpoints with x.
	for (int e : edges) result.push_back(Element::edge(e));
	return result;
}

bool Graph::total_adjacent(const Element& x, const Element& y) const {
	if (x == y) return false;
	if (x.is_vertex() && y.is_vertex()) {
		const auto& adj = neighbours(x.id);
		return std::binary_search(adj.begin(), adj.end(), y.id);
	}
	if (x.is_edge() && y.is_edge()) {
		const auto [a, b] = endpoints(x.id);
		const auto [c, d] = endpoints(y.id);
		return a == c || a == d || b == c || b == d;
	}
	const Element& vertex = x.is_vertex() ? x : y;
	const Element& edge = x.is_vertex() ? y : x;
	const auto [a, b] = endpoints(edge.id);
	return vertex.id == a || vertex.id == b;
}

Graph Graph::total_graph() const {
	const int n = vertex_count();
	Graph result(element_count());
	const auto all = elements();
	const auto node = [n](const Element& x) { return x.is_vertex() ? x.id : n + x.id; };
	for (std::size_t i = 0; i < all.size(); ++i) {
		for (std::size_t j = i + 1; j < all.size(); ++j) {
			if (total_adjacent(all[i], all[j])) result.add_edge(node(all[i]), node(all[j]));
		}
	}
	return result;
}

}  // namespace totalb
