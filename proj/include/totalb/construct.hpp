#ifndef TOTALB_CONSTRUCT_HPP
#define TOTALB_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "totalb/colouring.hpp"
#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Helpers shared by the colouring constructions.  They all enforce propriety
// at assignment time so a construction bug surfaces at the offending step
// with context, not as a bad colouring returned to the caller.

// Smallest colour in [1, limit] not used by any assigned total neighbour of
// x, or 0 if every colour clashes.
int smallest_free_colour(const Graph& graph, const TotalColouring& colouring, const Element& x,
                         int limit);

// Assigns colour to x after checking no assigned total neighbour already has
// it; throws InternalError naming `context` otherwise.
void assign_checked(const Graph& graph, TotalColouring& colouring, const Element& x, int colour,
                    const std::string& context);

// Assigns the smallest free colour in [1, colouring.k()] to x.
void greedy_assign(const Graph& graph, TotalColouring& colouring, const Element& x,
                   const std::string& context);

// Greedily completes every unassigned element, in the order given.
void greedy_complete(const Graph& graph, TotalColouring& colouring,
                     const std::vector<Element>& order, const std::string& context);

// Colours x's own total neighbourhood so that x sees every colour of
// [1, colouring.k()] except its own: each missing colour is placed on the
// first unassigned neighbour (canonical order) that accepts it properly.
// Throws InternalError naming `context` if the slots cannot host the missing
// colours.
void make_pickups_complete(const Graph& graph, TotalColouring& colouring, const Element& x,
                           const std::string& context);

// Verifies the finished colouring and throws InternalError unless the verdict
// is ValidTotalBChromatic.
void expect_valid(const Graph& graph, const TotalColouring& colouring,
                  const std::string& context);

// Colours of assigned total neighbours of x, deduplicated ascending.
std::vector<int> neighbour_colours(const Graph& graph, const TotalColouring& colouring,
                                   const Element& x);

}  // namespace totalb

#endif  // TOTALB_CONSTRUCT_HPP
