#ifndef TOTALB_COLOURING_HPP
#define TOTALB_COLOURING_HPP

#include <optional>
#include <vector>

#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// A (possibly partial) assignment of colours 1..k to the elements of a fixed
// graph.  Unassigned elements report no colour; the container never enforces
// propriety itself — that is verify()'s job — but it does enforce the colour
// range and element validity.
class TotalColouring {
  public:
	TotalColouring(const Graph& graph, int k);

	int k() const { return k_; }
	int vertex_slots() const { return static_cast<int>(vertex_colours_.size()); }
	int edge_slots() const { return static_cast<int>(edge_colours_.size()); }

	bool is_assigned(const Element& x) const { return raw(x) != 0; }
	std::optional<int> colour(const Element& x) const;

	// Assigns a colour in [1, k]; assigning over an existing colour is
	// allowed and replaces it.
	void set(const Element& x, int colour);
	void unset(const Element& x);

	bool is_complete() const { return assigned_count_ == vertex_slots() + edge_slots(); }
	int assigned_count() const { return assigned_count_; }

	// Colours used at least once, ascending.
	std::vector<int> used_colours() const;

	friend bool operator==(const TotalColouring& a, const TotalColouring& b) = default;

  private:
	int raw(const Element& x) const;
	int& raw_ref(const Element& x);

	int k_ = 0;
	int assigned_count_ = 0;
	std::vector<int> vertex_colours_;  // 0 = unassigned
	std::vector<int> edge_colours_;
};

}  // namespace totalb

#endif  // TOTALB_COLOURING_HPP
