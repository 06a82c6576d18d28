#ifndef TOTALB_EXACT_HPP
#define TOTALB_EXACT_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "totalb/colouring.hpp"
#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

struct ExactOptions {
	// Refuse graphs with more elements than this: the search is exponential
	// and meant as a ground-truth oracle for small instances.
	int element_cap = 40;
	// Abort with BudgetExceeded after this many search nodes; 0 disables the
	// budget.
	std::uint64_t node_budget = 0;
};

struct ExactResult {
	int phi = 0;  // the total b-chromatic number
	TotalColouring colouring;
	std::map<int, Element> witnesses;  // per colour, from verification
	std::uint64_t nodes_explored = 0;
	double elapsed_ms = 0.0;
};

// Computes the total b-chromatic number by backtracking, trying k from the
// total m-degree downward and returning at the first feasible k (the maximum,
// since the m-degree bounds every feasible k).  Deterministic: elements are
// assigned in order of total degree descending (ties by element order) and
// colours are tried ascending, with new colours introduced in ascending
// order.  Throws BudgetExceeded with the established bounds when the node
// budget runs out, and InputError above the element cap.
ExactResult solve_exact(const Graph& graph, const ExactOptions& options = {});

// Decision variant without the b-chromatic requirement: searches for any
// proper total k-colouring (not necessarily surjective).  Returns the first
// one found, or nullopt when none exists.
std::optional<TotalColouring> exists_total_k_colouring(const Graph& graph, int k,
                                                       const ExactOptions& options = {});

}  // namespace totalb

#endif  // TOTALB_EXACT_HPP
