#include "totalb/construct.hpp"

#include <algorithm>

#include "totalb/errors.hpp"
#include "totalb/verify.hpp"

namespace totalb {

std::vector<int> neighbour_colours(const Graph& graph, const TotalColouring& colouring,
                                   const Element& x) {
	std::vector<int> result;
	for (const Element& y : graph.total_neighbourhood(x)) {
		if (const auto c = colouring.colour(y)) result.push_back(*c);
	}
	std::sort(result.begin(), result.end());
	result.erase(std::unique(result.begin(), result.end()), result.end());
	return result;
}

int smallest_free_colour(const Graph& graph, const TotalColouring& colouring, const Element& x,
                         int limit) {
	std::vector<bool> taken(limit + 1, false);
	for (const Element& y : graph.total_neighbourhood(x)) {
		if (const auto c = colouring.colour(y)) {
			if (*c <= limit) taken[*c] = true;
		}
	}
	for (int c = 1; c <= limit; ++c) {
		if (!taken[c]) return c;
	}
	return 0;
}

void assign_checked(const Graph& graph, TotalColouring& colouring, const Element& x, int colour,
                    const std::string& context) {
	if (colouring.is_assigned(x)) {
		throw InternalError(context + ": " + to_string(x) + " already carries colour " +
		                    std::to_string(*colouring.colour(x)) +
		                    "; constructions never overwrite");
	}
	for (const Element& y : graph.total_neighbourhood(x)) {
		if (colouring.colour(y) == std::optional<int>(colour)) {
			throw InternalError(context + ": assigning colour " + std::to_string(colour) +
			                    " to " + to_string(x) + " clashes with neighbour " + to_string(y));
		}
	}
	colouring.set(x, colour);
}

void greedy_assign(const Graph& graph, TotalColouring& colouring, const Element& x,
                   const std::string& context) {
	const int c = smallest_free_colour(graph, colouring, x, colouring.k());
	if (c == 0) {
		throw InternalError(context + ": no free colour for " + to_string(x) + " among [1, " +
		                    std::to_string(colouring.k()) + "]");
	}
	colouring.set(x, c);
}

void greedy_complete(const Graph& graph, TotalColouring& colouring,
                     const std::vector<Element>& order, const std::string& context) {
	for (const Element& x : order) {
		if (!colouring.is_assigned(x)) greedy_assign(graph, colouring, x, context);
	}
}

void make_pickups_complete(const Graph& graph, TotalColouring& colouring, const Element& x,
                           const std::string& context) {
	const auto own = colouring.colour(x);
	if (!own) {
		throw InternalError(context + ": cannot complete pickups of uncoloured " + to_string(x));
	}
	std::vector<bool> seen(colouring.k() + 1, false);
	seen[*own] = true;
	const auto neighbourhood = graph.total_neighbourhood(x);
	for (const Element& y : neighbourhood) {
		if (const auto c = colouring.colour(y)) seen[*c] = true;
	}
	for (int missing = 1; missing <= colouring.k(); ++missing) {
		if (seen[missing]) continue;
		bool placed = false;
		for (const Element& slot : neighbourhood) {
			if (colouring.is_assigned(slot)) continue;
			bool clash = false;
			for (const Element& z : graph.total_neighbourhood(slot)) {
				if (colouring.colour(z) == std::optional<int>(missing)) {
					clash = true;
					break;
				}
			}
			if (clash) continue;
			colouring.set(slot, missing);
			placed = true;
			break;
		}
		if (!placed) {
			throw InternalError(context + ": no slot around " + to_string(x) +
			                    " accepts missing colour " + std::to_string(missing));
		}
	}
}

void expect_valid(const Graph& graph, const TotalColouring& colouring,
                  const std::string& context) {
	const auto report = verify(graph, colouring);
	if (report.verdict != Verdict::ValidTotalBChromatic) {
		throw InternalError(context + ": construction produced a colouring with verdict '" +
		                    to_string(report.verdict) + "' instead of valid-total-b-chromatic");
	}
}

}  // namespace totalb
