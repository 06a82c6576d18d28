#include "totalb/verify.hpp"

#include <algorithm>

namespace totalb {

const char* to_string(Verdict verdict) {
	switch (verdict) {
		case Verdict::ValidTotalBChromatic: return "valid-total-b-chromatic";
		case Verdict::ValidTotalOnly: return "valid-total-only";
		case Verdict::Improper: return "improper";
		case Verdict::NotSurjective: return "not-surjective";
		case Verdict::Incomplete: return "incomplete";
	}
	return "unknown";
}

bool is_witness(const Graph& graph, const TotalColouring& colouring, const Element& x) {
	const auto own = colouring.colour(x);
	if (!own) return false;
	std::vector<bool> seen(colouring.k() + 1, false);
	for (const Element& y : graph.total_neighbourhood(x)) {
		if (const auto c = colouring.colour(y)) seen[*c] = true;
	}
	for (int c = 1; c <= colouring.k(); ++c) {
		if (c != *own && !seen[c]) return false;
	}
	return true;
}

VerificationReport verify(const Graph& graph, const TotalColouring& colouring) {
	VerificationReport report{};
	const auto elements = graph.elements();

	for (const Element& x : elements) {
		if (!colouring.is_assigned(x)) report.unassigned.push_back(x);
	}
	for (const Element& x : elements) {
		const auto cx = colouring.colour(x);
		if (!cx) continue;
		for (const Element& y : graph.total_neighbourhood(x)) {
			if (!(x < y)) continue;  // report each unordered pair once
			if (colouring.colour(y) == cx) report.conflicts.emplace_back(x, y);
		}
	}
	if (!report.conflicts.empty()) {
		report.verdict = Verdict::Improper;
		return report;
	}
	if (!report.unassigned.empty()) {
		report.verdict = Verdict::Incomplete;
		return report;
	}

	const auto used = colouring.used_colours();
	for (int c = 1; c <= colouring.k(); ++c) {
		if (!std::binary_search(used.begin(), used.end(), c)) report.missing_colours.push_back(c);
	}
	if (!report.missing_colours.empty()) {
		report.verdict = Verdict::NotSurjective;
		return report;
	}

	for (const Element& x : elements) {
		const int c = *colouring.colour(x);
		if (report.witnesses.count(c)) continue;
		if (is_witness(graph, colouring, x)) report.witnesses.emplace(c, x);
	}
	for (int c = 1; c <= colouring.k(); ++c) {
		if (!report.witnesses.count(c)) report.unwitnessed_colours.push_back(c);
	}
	report.verdict = report.unwitnessed_colours.empty() ? Verdict::ValidTotalBChromatic
	                                                    : Verdict::ValidTotalOnly;
	return report;
}

}  // namespace totalb
