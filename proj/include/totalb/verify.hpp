#ifndef TOTALB_VERIFY_HPP
#define TOTALB_VERIFY_HPP

#include <map>
#include <utility>
#include <vector>

#include "totalb/colouring.hpp"
#include "totalb/elements.hpp"
#include "totalb/graph.hpp"

namespace totalb {

enum class Verdict {
	// Complete, proper, every colour used and every colour has a witness: an
	// element that sees all other colours in its total neighbourhood.
	ValidTotalBChromatic,
	// Complete, proper and surjective, but at least one colour lacks a
	// witness.
	ValidTotalOnly,
	// Two totally adjacent elements share a colour.
	Improper,
	// Complete and proper but some colour in [1, k] is never used.
	NotSurjective,
	// Proper so far, but at least one element is unassigned.
	Incomplete,
};

const char* to_string(Verdict verdict);

struct VerificationReport {
	Verdict verdict;
	// Totally adjacent pairs sharing a colour (each unordered pair reported
	// once, smaller element first).
	std::vector<std::pair<Element, Element>> conflicts;
	// Elements without a colour (verdict Incomplete).
	std::vector<Element> unassigned;
	// Colours in [1, k] used by no element (verdict NotSurjective).
	std::vector<int> missing_colours;
	// Colours with no witnessing element (verdict ValidTotalOnly).
	std::vector<int> unwitnessed_colours;
	// First witness per colour in canonical element order; populated only for
	// complete, proper, surjective colourings.
	std::map<int, Element> witnesses;
};

// Checks a colouring against the graph.  Verdict precedence: a conflict
// always yields Improper; otherwise missing assignments yield Incomplete,
// unused colours NotSurjective, and a full proper surjective colouring is
// graded on witnesses.
VerificationReport verify(const Graph& graph, const TotalColouring& colouring);

// Whether x sees every colour of [1, k] except its own among its assigned
// total neighbours.  (On complete colourings this is the witness property.)
bool is_witness(const Graph& graph, const TotalColouring& colouring, const Element& x);

}  // namespace totalb

#endif  // TOTALB_VERIFY_HPP
