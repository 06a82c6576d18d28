#ifndef TOTALB_SOLVER_HPP
#define TOTALB_SOLVER_HPP

#include <optional>
#include <string>

#include "totalb/caterpillar.hpp"
#include "totalb/colouring.hpp"
#include "totalb/dense_paths.hpp"
#include "totalb/exact.hpp"
#include "totalb/graph.hpp"

namespace totalb {

enum class SolveMethod {
	ClosedFormPath,      // path graphs
	ClosedFormStar,      // stars, and forests of stars on disconnected input
	SmallMDegree,        // caterpillars with total m-degree <= 5
	PivotedMinusOne,     // pivoted caterpillars: optimum is m_t - 1
	DenseOutsideSpine,   // a dense pendant edge exists and the graph is not pivoted
	SingleDensePath,     // all dense elements on one spine dense path
	FallbackExact,       // structure outside the handled cases, answered exactly
	OutsideTheoremScope  // structure outside the handled cases, no answer
};

const char* to_string(SolveMethod method);

struct SolveOptions {
	// When the structural cases do not apply, fall back to the exact solver
	// (subject to its element cap / node budget) instead of returning
	// OutsideTheoremScope.
	bool allow_fallback_exact = false;
	ExactOptions exact;
};

struct SolveOutcome {
	std::optional<int> phi;                  // absent for OutsideTheoremScope
	std::optional<TotalColouring> colouring; // verified when present
	SolveMethod method = SolveMethod::OutsideTheoremScope;
	std::string certificate;                 // human-readable justification
};

// Computes the total b-chromatic number of a caterpillar (or of a forest of
// stars) together with an optimal colouring, dispatching on its dense
// structure.  Inputs that are neither raise InputError.  Every returned
// colouring has been verified; a construction that fails verification raises
// InternalError instead of returning.
SolveOutcome solve(const Graph& graph, const SolveOptions& options = {});

// --- the individual constructions, exposed for direct use and testing ------

// Caterpillars with total m-degree <= 5 always attain it.
TotalColouring colour_small_m_degree(const Graph& graph,
                                     const CaterpillarDecomposition& decomposition);

// Pivoted caterpillars attain exactly m_t - 1 colours; `classification` must
// hold one of the two pivot shapes.
TotalColouring colour_pivoted(const Graph& graph, const CaterpillarDecomposition& decomposition,
                              const PivotClassification& classification);

// Non-pivoted caterpillars with a dense element off the spine (necessarily a
// pendant edge) attain m_t.  Returns nullopt in the degenerate case where no
// companion dense vertex exists for the construction (only possible with more
// than m_t dense elements); callers then fall back.
std::optional<TotalColouring> colour_dense_outside_spine(
    const Graph& graph, const CaterpillarDecomposition& decomposition);

// Non-pivoted caterpillars whose dense elements all lie on a single spine
// dense path attain m_t, coloured through a window of the path holding
// exactly m_t dense elements.  Returns nullopt when no such window exists
// (a parity obstruction possible only when the path has more than m_t dense
// elements).
std::optional<TotalColouring> colour_single_dense_path(
    const Graph& graph, const CaterpillarDecomposition& decomposition, const DensePath& path);

}  // namespace totalb

#endif  // TOTALB_SOLVER_HPP
