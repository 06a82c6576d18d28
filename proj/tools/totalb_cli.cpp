#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "totalb/caterpillar.hpp"
#include "totalb/closed_forms.hpp"
#include "totalb/colouring.hpp"
#include "totalb/dense_paths.hpp"
#include "totalb/errors.hpp"
#include "totalb/exact.hpp"
#include "totalb/generators.hpp"
#include "totalb/graph.hpp"
#include "totalb/io.hpp"
#include "totalb/mdegree.hpp"
#include "totalb/reduction.hpp"
#include "totalb/solver.hpp"
#include "totalb/verify.hpp"

namespace {

using namespace totalb;

void write_text_file(const std::string& path, const std::string& text) {
	std::ofstream out(path);
	if (!out) throw InputError("cannot open output file: " + path);
	out << text;
}

void emit_colouring(const TotalColouring& colouring, const Graph& graph,
                    const std::string& json_path, const std::string& dot_path,
                    bool print_json_to_stdout) {
	if (!json_path.empty()) write_text_file(json_path, colouring_to_json_string(colouring));
	if (!dot_path.empty()) write_text_file(dot_path, to_dot(graph, colouring));
	if (print_json_to_stdout && json_path.empty()) {
		std::cout << colouring_to_json_string(colouring);
	}
}

int run_solve(const std::string& graph_path, bool fallback, int cap, std::uint64_t budget,
              const std::string& json_path, const std::string& dot_path) {
	const Graph graph = read_graph_file(graph_path);
	SolveOptions options;
	options.allow_fallback_exact = fallback;
	options.exact.element_cap = cap;
	options.exact.node_budget = budget;
	const SolveOutcome outcome = solve(graph, options);
	std::cout << "method: " << to_string(outcome.method) << "\n";
	if (outcome.phi) {
		std::cout << "phi: " << *outcome.phi << "\n";
	} else {
		std::cout << "phi: unknown\n";
	}
	std::cout << "certificate: " << outcome.certificate << "\n";
	if (outcome.colouring) {
		emit_colouring(*outcome.colouring, graph, json_path, dot_path, false);
		if (json_path.empty() && dot_path.empty()) {
			std::cout << colouring_to_json_string(*outcome.colouring);
		}
	}
	return outcome.method == SolveMethod::OutsideTheoremScope ? 3 : 0;
}

int run_exact(const std::string& graph_path, int cap, std::uint64_t budget,
              const std::string& json_path, const std::string& dot_path) {
	const Graph graph = read_graph_file(graph_path);
	ExactOptions options;
	options.element_cap = cap;
	options.node_budget = budget;
	const ExactResult result = solve_exact(graph, options);
	std::cout << "phi: " << result.phi << "\n";
	std::cout << "nodes explored: " << result.nodes_explored << "\n";
	std::cout << "elapsed ms: " << result.elapsed_ms << "\n";
	for (const auto& [colour, witness] : result.witnesses) {
		std::cout << "witness of colour " << colour << ": " << to_string(witness) << "\n";
	}
	emit_colouring(result.colouring, graph, json_path, dot_path, true);
	return 0;
}

int run_verify(const std::string& graph_path, const std::string& colouring_path) {
	const Graph graph = read_graph_file(graph_path);
	const TotalColouring colouring = read_colouring_file(graph, colouring_path);
	const VerificationReport report = verify(graph, colouring);
	std::cout << "verdict: " << to_string(report.verdict) << "\n";
	for (const auto& [a, b] : report.conflicts) {
		std::cout << "conflict: " << to_string(a) << " and " << to_string(b)
		          << " share a colour\n";
	}
	if (!report.unassigned.empty()) {
		std::cout << "unassigned elements: " << report.unassigned.size() << "\n";
	}
	for (int colour : report.missing_colours) {
		std::cout << "missing colour: " << colour << "\n";
	}
	for (int colour : report.unwitnessed_colours) {
		std::cout << "unwitnessed colour: " << colour << "\n";
	}
	for (const auto& [colour, witness] : report.witnesses) {
		std::cout << "witness of colour " << colour << ": " << to_string(witness) << "\n";
	}
	return report.verdict == Verdict::ValidTotalBChromatic ? 0 : 2;
}

int run_mdegree(const std::string& graph_path) {
	const Graph graph = read_graph_file(graph_path);
	const int m = total_m_degree(graph);
	std::cout << "total m-degree: " << m << "\n";
	const auto dense = dense_elements(graph);
	std::cout << "dense elements (" << dense.size() << "):";
	for (const Element& x : dense) {
		std::cout << " " << to_string(x);
		if (is_tight(graph, m, x)) std::cout << "*";
	}
	std::cout << "\n(* marks tight elements, total degree exactly m - 1)\n";
	return 0;
}

int run_caterpillar(const std::string& graph_path) {
	const Graph graph = read_graph_file(graph_path);
	const DecomposeOutcome outcome = decompose_caterpillar(graph);
	if (const auto* failure = std::get_if<NotCaterpillar>(&outcome)) {
		std::cout << "not a caterpillar: " << failure->detail << "\n";
		return 2;
	}
	const auto& decomposition = std::get<CaterpillarDecomposition>(outcome);
	std::cout << "caterpillar with spine of " << decomposition.spine.size() << " vertex(es)\n";
	std::cout << "spine:";
	for (int v : decomposition.spine) std::cout << " " << v;
	std::cout << "\n";
	for (std::size_t i = 0; i < decomposition.spine.size(); ++i) {
		if (decomposition.leaves[i].empty()) continue;
		std::cout << "leaves of " << decomposition.spine[i] << ":";
		for (int leaf : decomposition.leaves[i]) std::cout << " " << leaf;
		std::cout << "\n";
	}
	for (int v : decomposition.ambiguous_ends) {
		std::cout << "ambiguous end: " << v << " (its single leaf could serve as the spine end)\n";
	}
	const int m = total_m_degree(graph);
	std::cout << "total m-degree: " << m << "\n";
	for (const DensePath& path : find_dense_paths(graph, decomposition)) {
		std::cout << "dense path [" << path.vertices.front() << ".." << path.vertices.back()
		          << "] " << to_string(path.type) << " with " << path.dense_count
		          << " dense element(s)\n";
	}
	if (m >= 6) {
		const PivotClassification classification = classify_pivoted(graph, decomposition);
		if (const auto* p1 = std::get_if<PivotType1>(&classification)) {
			std::cout << "pivoted (shape 1): hub " << p1->u << ", degree-2 neighbour "
			          << p1->u_prime << ", companion " << p1->v << "\n";
		} else if (const auto* p2 = std::get_if<PivotType2>(&classification)) {
			std::cout << "pivoted (shape 2): dense paths [" << p2->first.vertices.front() << ".."
			          << p2->first.vertices.back() << "] and [" << p2->second.vertices.front()
			          << ".." << p2->second.vertices.back() << "]\n";
		} else {
			std::cout << "not pivoted: " << std::get<NotPivoted>(classification).diagnostic
			          << "\n";
		}
	}
	return 0;
}

int run_generate(const std::string& family, int n, int spine, int leaves, int k, int m,
                 std::uint64_t seed, int max_n, const std::string& out_path,
                 const std::string& dot_path) {
	Graph graph(1);
	if (family == "path") {
		graph = make_path(n);
	} else if (family == "star") {
		graph = make_star(n);
	} else if (family == "uniform") {
		graph = make_uniform_caterpillar(spine, leaves);
	} else if (family == "dense-one") {
		graph = make_minimal_dense_caterpillar(k, DensePathType::One);
	} else if (family == "dense-two") {
		graph = make_minimal_dense_caterpillar(k, DensePathType::Two);
	} else if (family == "dense-three") {
		graph = make_minimal_dense_caterpillar(k, DensePathType::Three);
	} else if (family == "pivot-hub") {
		graph = make_pivoted_hub_caterpillar(m);
	} else if (family == "pivot-shared") {
		graph = make_pivoted_shared_caterpillar();
	} else if (family == "pivot-bridged") {
		graph = make_pivoted_bridged_caterpillar();
	} else if (family == "random") {
		graph = make_random_caterpillar(seed, max_n);
	} else if (family == "cube") {
		graph = make_cube();
	} else {
		throw InputError("unknown family: " + family);
	}
	const std::string text = graph_to_string(graph);
	if (!out_path.empty()) {
		write_text_file(out_path, text);
	} else {
		std::cout << text;
	}
	if (!dot_path.empty()) write_text_file(dot_path, to_dot(graph));
	return 0;
}

int run_reduce(const std::string& graph_path, const std::string& out_path,
               const std::string& lift_path, const std::string& project_path,
               const std::string& json_path) {
	const Graph source = read_graph_file(graph_path);
	const ReductionGadget gadget = build_gadget(source);
	std::cout << "gadget vertices: " << gadget.h.vertex_count() << "\n";
	std::cout << "gadget edges: " << gadget.h.edge_count() << "\n";
	std::cout << "gadget total m-degree: " << total_m_degree(gadget.h) << "\n";
	if (!out_path.empty()) write_text_file(out_path, graph_to_string(gadget.h));
	if (!lift_path.empty()) {
		const TotalColouring source_colouring = read_colouring_file(source, lift_path);
		const TotalColouring lifted = lift_colouring(gadget, source, source_colouring);
		if (!json_path.empty()) {
			write_text_file(json_path, colouring_to_json_string(lifted));
		} else {
			std::cout << colouring_to_json_string(lifted);
		}
	}
	if (!project_path.empty()) {
		const TotalColouring gadget_colouring = read_colouring_file(gadget.h, project_path);
		const TotalColouring projected = project_colouring(gadget, source, gadget_colouring);
		if (!json_path.empty()) {
			write_text_file(json_path, colouring_to_json_string(projected));
		} else {
			std::cout << colouring_to_json_string(projected);
		}
	}
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"total b-chromatic colourings of caterpillar trees"};
	app.require_subcommand(1);

	std::string graph_path, colouring_path, json_path, dot_path, out_path;
	std::string family, lift_path, project_path;
	bool fallback = false;
	int cap = 40;
	std::uint64_t budget = 0;
	std::uint64_t seed = 0;
	int n = 1, spine = 1, leaves = 0, k = 3, m = 7, max_n = 10;

	auto* solve_cmd = app.add_subcommand(
	    "solve", "compute the optimum number of colours and a colouring for a caterpillar");
	solve_cmd->add_option("graph", graph_path, "graph file (p/e text format)")->required();
	solve_cmd->add_flag("--fallback-exact", fallback,
	                    "run the exact solver when no structural case applies");
	solve_cmd->add_option("--cap", cap, "element cap for the exact fallback (default 40)");
	solve_cmd->add_option("--budget", budget, "node budget for the exact fallback (0 = none)");
	solve_cmd->add_option("--json", json_path, "write the colouring JSON to this file");
	solve_cmd->add_option("--dot", dot_path, "write a Graphviz rendering to this file");

	auto* exact_cmd =
	    app.add_subcommand("exact", "exhaustive optimum for small graphs (ground truth)");
	exact_cmd->add_option("graph", graph_path, "graph file (p/e text format)")->required();
	exact_cmd->add_option("--cap", cap, "refuse graphs with more elements than this");
	exact_cmd->add_option("--budget", budget, "abort after this many search nodes (0 = none)");
	exact_cmd->add_option("--json", json_path, "write the colouring JSON to this file");
	exact_cmd->add_option("--dot", dot_path, "write a Graphviz rendering to this file");

	auto* verify_cmd = app.add_subcommand(
	    "verify", "check a colouring; exit 0 only for a valid total b-chromatic colouring");
	verify_cmd->add_option("graph", graph_path, "graph file (p/e text format)")->required();
	verify_cmd->add_option("colouring", colouring_path, "colouring JSON file")->required();

	auto* mdegree_cmd =
	    app.add_subcommand("mdegree", "total m-degree and dense elements of a graph");
	mdegree_cmd->add_option("graph", graph_path, "graph file (p/e text format)")->required();

	auto* caterpillar_cmd = app.add_subcommand(
	    "caterpillar", "spine decomposition, dense paths and pivot classification");
	caterpillar_cmd->add_option("graph", graph_path, "graph file (p/e text format)")->required();

	auto* generate_cmd = app.add_subcommand("generate", "emit a graph from a built-in family");
	generate_cmd
	    ->add_option("family", family,
	                 "path | star | uniform | dense-one | dense-two | dense-three | pivot-hub | "
	                 "pivot-shared | pivot-bridged | random | cube")
	    ->required();
	generate_cmd->add_option("-n,--n", n, "vertex count (path) or spoke count (star)");
	generate_cmd->add_option("--spine", spine, "spine length (uniform)");
	generate_cmd->add_option("--leaves", leaves, "leaves per spine vertex (uniform)");
	generate_cmd->add_option("-k,--k", k, "spine length of the dense path (dense-*)");
	generate_cmd->add_option("-m,--m", m, "target total m-degree (pivot-hub, at least 7)");
	generate_cmd->add_option("--seed", seed, "random seed (random)");
	generate_cmd->add_option("--max-n", max_n, "maximum vertex count (random)");
	generate_cmd->add_option("--out", out_path, "write the graph here instead of stdout");
	generate_cmd->add_option("--dot", dot_path, "write a Graphviz rendering to this file");

	auto* reduce_cmd = app.add_subcommand(
	    "reduce", "build the hardness gadget around a connected cubic bipartite graph");
	reduce_cmd->add_option("graph", graph_path, "source graph file (p/e text format)")
	    ->required();
	reduce_cmd->add_option("--out", out_path, "write the gadget graph to this file");
	reduce_cmd->add_option("--lift", lift_path,
	                       "lift this proper total 4-colouring of the source onto the gadget");
	reduce_cmd->add_option("--project", project_path,
	                       "project this gadget colouring back onto the source");
	reduce_cmd->add_option("--json", json_path, "write the resulting colouring JSON to this file");

	CLI11_PARSE(app, argc, argv);

	try {
		if (solve_cmd->parsed()) {
			return run_solve(graph_path, fallback, cap, budget, json_path, dot_path);
		}
		if (exact_cmd->parsed()) return run_exact(graph_path, cap, budget, json_path, dot_path);
		if (verify_cmd->parsed()) return run_verify(graph_path, colouring_path);
		if (mdegree_cmd->parsed()) return run_mdegree(graph_path);
		if (caterpillar_cmd->parsed()) return run_caterpillar(graph_path);
		if (generate_cmd->parsed()) {
			return run_generate(family, n, spine, leaves, k, m, seed, max_n, out_path, dot_path);
		}
		if (reduce_cmd->parsed()) {
			return run_reduce(graph_path, out_path, lift_path, project_path, json_path);
		}
	} catch (const BudgetExceeded& error) {
		std::cerr << "error: " << error.what() << " (bounds: " << error.lower_bound << ".."
		          << error.upper_bound << ")\n";
		return 4;
	} catch (const InternalError& error) {
		std::cerr << "internal error: " << error.what() << "\n";
		return 5;
	} catch (const Error& error) {
		std::cerr << "error: " << error.what() << "\n";
		return 1;
	}
	return 0;
}
