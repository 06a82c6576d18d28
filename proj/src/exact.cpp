#include "totalb/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "totalb/errors.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/verify.hpp"

namespace totalb {

namespace {

// Backtracking over element indices: vertex v is element v, edge e is element
// n + e, so ascending index order coincides with the canonical element order.
class Search {
  public:
	Search(const Graph& graph, int k, bool require_b_chromatic, std::uint64_t node_budget,
	       std::uint64_t initial_nodes)
	    : graph_(graph),
	      k_(k),
	      require_b_chromatic_(require_b_chromatic),
	      node_budget_(node_budget),
	      nodes_(initial_nodes) {
		const int n = graph.vertex_count();
		const int total = graph.element_count();
		adjacency_.resize(total);
		total_degree_.resize(total);
		colour_.assign(total, 0);
		unassigned_neighbours_.resize(total);
		colour_count_.assign(static_cast<std::size_t>(total) * (k + 1), 0);
		const auto index_of = [n](const Element& x) { return x.is_vertex() ? x.id : n + x.id; };
		for (const Element& x : graph.elements()) {
			const int i = index_of(x);
			total_degree_[i] = graph.total_degree(x);
			for (const Element& y : graph.total_neighbourhood(x)) adjacency_[i].push_back(index_of(y));
			unassigned_neighbours_[i] = static_cast<int>(adjacency_[i].size());
		}
		order_.resize(total);
		std::iota(order_.begin(), order_.end(), 0);
		std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
			return total_degree_[a] > total_degree_[b];
		});
		for (int i = 0; i < total; ++i) {
			if (total_degree_[i] >= k_ - 1) witness_candidates_.push_back(i);
		}
	}

	bool run() {
		if (require_b_chromatic_ && static_cast<int>(witness_candidates_.size()) < k_) {
			return false;  // witnesses of distinct colours are distinct elements
		}
		return dfs(0, 0);
	}

	std::uint64_t nodes() const { return nodes_; }

	TotalColouring extract(const Graph& graph) const {
		TotalColouring result(graph, k_);
		const int n = graph.vertex_count();
		for (int i = 0; i < static_cast<int>(colour_.size()); ++i) {
			if (colour_[i] != 0) {
				result.set(i < n ? Element::vertex(i) : Element::edge(i - n), colour_[i]);
			}
		}
		return result;
	}

  private:
	std::uint8_t& count(int element, int colour) {
		return colour_count_[static_cast<std::size_t>(element) * (k_ + 1) + colour];
	}
	const std::uint8_t& count(int element, int colour) const {
		return colour_count_[static_cast<std::size_t>(element) * (k_ + 1) + colour];
	}

	void assign(int element, int colour) {
		colour_[element] = colour;
		for (int y : adjacency_[element]) {
			++count(y, colour);
			--unassigned_neighbours_[y];
		}
	}

	void unassign(int element, int colour) {
		colour_[element] = 0;
		for (int y : adjacency_[element]) {
			--count(y, colour);
			++unassigned_neighbours_[y];
		}
	}

	// Number of colours in [1, k] \ {excluded} that no neighbour of the
	// element carries yet.
	int missing_pickups(int element, int excluded) const {
		int missing = 0;
		for (int c = 1; c <= k_; ++c) {
			if (c != excluded && count(element, c) == 0) ++missing;
		}
		return missing;
	}

	// A colour stays feasible while some candidate could still become its
	// witness: either an element already carrying it that can pick up its
	// remaining colours from unassigned neighbours, or an unassigned element
	// of high enough total degree that could take it.
	bool colour_still_witnessable(int colour) const {
		for (int y : witness_candidates_) {
			if (colour_[y] == colour) {
				if (missing_pickups(y, colour) <= unassigned_neighbours_[y]) return true;
			} else if (colour_[y] == 0 && count(y, colour) == 0) {
				if (missing_pickups(y, colour) <= unassigned_neighbours_[y]) return true;
			}
		}
		return false;
	}

	bool all_colours_witnessable() const {
		for (int c = 1; c <= k_; ++c) {
			if (!colour_still_witnessable(c)) return false;
		}
		return true;
	}

	bool dfs(int position, int max_used) {
		if (node_budget_ != 0 && nodes_ >= node_budget_) {
			throw BudgetExceeded("exact search exceeded its node budget of " +
			                         std::to_string(node_budget_),
			                     1, k_);
		}
		++nodes_;
		if (position == static_cast<int>(order_.size())) {
			// With the witnessability invariant maintained at every step, a
			// complete assignment has a witness for every colour.
			return true;
		}
		const int element = order_[position];
		const int limit = std::min(k_, max_used + 1);
		for (int c = 1; c <= limit; ++c) {
			if (count(element, c) != 0) continue;
			assign(element, c);
			const bool viable = !require_b_chromatic_ || all_colours_witnessable();
			if (viable && dfs(position + 1, std::max(max_used, c))) return true;
			unassign(element, c);
		}
		return false;
	}

	const Graph& graph_;
	int k_;
	bool require_b_chromatic_;
	std::uint64_t node_budget_;
	std::uint64_t nodes_;
	std::vector<std::vector<int>> adjacency_;
	std::vector<int> total_degree_;
	std::vector<int> order_;
	std::vector<int> colour_;
	std::vector<int> unassigned_neighbours_;
	std::vector<std::uint8_t> colour_count_;
	std::vector<int> witness_candidates_;
};

void check_cap(const Graph& graph, const ExactOptions& options, const std::string& caller) {
	if (graph.element_count() > options.element_cap) {
		throw InputError(caller + ": graph has " + std::to_string(graph.element_count()) +
		                 " elements, above the configured cap of " +
		                 std::to_string(options.element_cap));
	}
}

}  // namespace

ExactResult solve_exact(const Graph& graph, const ExactOptions& options) {
	check_cap(graph, options, "solve_exact");
	const auto start = std::chrono::steady_clock::now();
	const int m = total_m_degree(graph);
	std::uint64_t nodes = 0;
	for (int k = m; k >= 1; --k) {
		Search search(graph, k, /*require_b_chromatic=*/true, options.node_budget, nodes);
		bool found = false;
		try {
			found = search.run();
		} catch (const BudgetExceeded&) {
			throw BudgetExceeded("solve_exact exceeded its node budget of " +
			                         std::to_string(options.node_budget) + " while testing k = " +
			                         std::to_string(k),
			                     1, k);
		}
		nodes = search.nodes();
		if (found) {
			ExactResult result{k, search.extract(graph), {}, nodes, 0.0};
			const auto report = verify(graph, result.colouring);
			if (report.verdict != Verdict::ValidTotalBChromatic) {
				throw InternalError("solve_exact produced a colouring with verdict '" +
				                    std::string(to_string(report.verdict)) + "' for k = " +
				                    std::to_string(k));
			}
			result.witnesses = report.witnesses;
			result.elapsed_ms =
			    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
			        .count();
			return result;
		}
	}
	// Unreachable: a single element admits the 1-colouring, and any graph
	// with at least one edge admits a minimum proper total colouring, which
	// witnesses every colour.
	throw InternalError("solve_exact found no feasible k, which cannot happen");
}

std::optional<TotalColouring> exists_total_k_colouring(const Graph& graph, int k,
                                                       const ExactOptions& options) {
	check_cap(graph, options, "exists_total_k_colouring");
	if (k < 1) throw InputError("exists_total_k_colouring requires k >= 1");
	Search search(graph, k, /*require_b_chromatic=*/false, options.node_budget, 0);
	if (!search.run()) return std::nullopt;
	return search.extract(graph);
}

}  // namespace totalb
