#include "totalb/colouring.hpp"

#include <algorithm>
#include <string>

#include "totalb/errors.hpp"

namespace totalb {

TotalColouring::TotalColouring(const Graph& graph, int k)
    : k_(k),
      vertex_colours_(graph.vertex_count(), 0),
      edge_colours_(graph.edge_count(), 0) {
	if (k < 1) {
		throw InputError("colour count k must be at least 1, got " + std::to_string(k));
	}
}

int TotalColouring::raw(const Element& x) const {
	const auto& slots = x.is_vertex() ? vertex_colours_ : edge_colours_;
	if (x.id < 0 || x.id >= static_cast<int>(slots.size())) {
		throw InputError("element " + to_string(x) + " does not exist in this graph");
	}
	return slots[x.id];
}

int& TotalColouring::raw_ref(const Element& x) {
	auto& slots = x.is_vertex() ? vertex_colours_ : edge_colours_;
	if (x.id < 0 || x.id >= static_cast<int>(slots.size())) {
		throw InputError("element " + to_string(x) + " does not exist in this graph");
	}
	return slots[x.id];
}

std::optional<int> TotalColouring::colour(const Element& x) const {
	const int c = raw(x);
	if (c == 0) return std::nullopt;
	return c;
}

void TotalColouring::set(const Element& x, int colour) {
	if (colour < 1 || colour > k_) {
		throw InputError("colour " + std::to_string(colour) + " for element " + to_string(x) +
		                 " is outside [1, " + std::to_string(k_) + "]");
	}
	int& slot = raw_ref(x);
	if (slot == 0) ++assigned_count_;
	slot = colour;
}

void TotalColouring::unset(const Element& x) {
	int& slot = raw_ref(x);
	if (slot != 0) --assigned_count_;
	slot = 0;
}

std::vector<int> TotalColouring::used_colours() const {
	std::vector<bool> seen(k_ + 1, false);
	for (int c : vertex_colours_) {
		if (c != 0) seen[c] = true;
	}
	for (int c : edge_colours_) {
		if (c != 0) seen[c] = true;
	}
	std::vector<int> result;
	for (int c = 1; c <= k_; ++c) {
		if (seen[c]) result.push_back(c);
	}
	return result;
}

}  // namespace totalb
