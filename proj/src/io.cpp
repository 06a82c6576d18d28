#include "totalb/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "totalb/errors.hpp"

namespace totalb {

namespace {

[[noreturn]] void fail_line(int line, const std::string& message) {
	throw InputError("line " + std::to_string(line) + ": " + message);
}

int parse_id(const nlohmann::json& data, const std::string& key, int limit,
             const std::string& what) {
	std::size_t consumed = 0;
	int id = -1;
	try {
		id = std::stoi(key, &consumed);
	} catch (const std::exception&) {
		throw InputError("colouring JSON: " + what + " key '" + key + "' is not an integer");
	}
	if (consumed != key.size() || id < 0 || id >= limit) {
		throw InputError("colouring JSON: " + what + " key '" + key +
		                 "' is not a valid id (graph has " + std::to_string(limit) + ")");
	}
	(void)data;
	return id;
}

}  // namespace

Graph parse_graph(std::istream& in) {
	std::string line;
	int line_number = 0;
	bool seen_header = false;
	int expected_edges = 0;
	Graph graph;
	while (std::getline(in, line)) {
		++line_number;
		std::istringstream fields(line);
		std::string tag;
		if (!(fields >> tag)) continue;  // blank line
		if (tag == "c") continue;
		if (tag == "p") {
			if (seen_header) fail_line(line_number, "duplicate p line");
			int n = 0, m = 0;
			if (!(fields >> n >> m) || n < 0 || m < 0) {
				fail_line(line_number, "expected 'p <vertex count> <edge count>'");
			}
			graph = Graph(n);
			expected_edges = m;
			seen_header = true;
		} else if (tag == "e") {
			if (!seen_header) fail_line(line_number, "e line before the p line");
			int u = 0, v = 0;
			if (!(fields >> u >> v)) fail_line(line_number, "expected 'e <u> <v>'");
			try {
				graph.add_edge(u, v);
			} catch (const Error& error) {
				fail_line(line_number, error.what());
			}
		} else {
			fail_line(line_number, "unknown record '" + tag + "'");
		}
		std::string extra;
		if (fields >> extra) fail_line(line_number, "trailing data '" + extra + "'");
	}
	if (!seen_header) throw InputError("graph text has no p line");
	if (graph.edge_count() != expected_edges) {
		throw InputError("graph text announces " + std::to_string(expected_edges) +
		                 " edges but lists " + std::to_string(graph.edge_count()));
	}
	return graph;
}

Graph parse_graph_string(const std::string& text) {
	std::istringstream in(text);
	return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InputError("cannot open graph file: " + path);
	return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
	out << "p " << graph.vertex_count() << " " << graph.edge_count() << "\n";
	for (int e = 0; e < graph.edge_count(); ++e) {
		const auto [u, v] = graph.endpoints(e);
		out << "e " << u << " " << v << "\n";
	}
}

std::string graph_to_string(const Graph& graph) {
	std::ostringstream out;
	write_graph(out, graph);
	return out.str();
}

nlohmann::ordered_json colouring_to_json(const TotalColouring& colouring) {
	nlohmann::ordered_json data;
	data["k"] = colouring.k();
	data["vertices"] = nlohmann::ordered_json::object();
	data["edges"] = nlohmann::ordered_json::object();
	for (int v = 0; v < colouring.vertex_slots(); ++v) {
		const auto colour = colouring.colour(Element::vertex(v));
		if (colour) data["vertices"][std::to_string(v)] = *colour;
	}
	for (int e = 0; e < colouring.edge_slots(); ++e) {
		const auto colour = colouring.colour(Element::edge(e));
		if (colour) data["edges"][std::to_string(e)] = *colour;
	}
	return data;
}

std::string colouring_to_json_string(const TotalColouring& colouring) {
	return colouring_to_json(colouring).dump(2) + "\n";
}

TotalColouring colouring_from_json(const Graph& graph, const nlohmann::json& data) {
	if (!data.is_object()) throw InputError("colouring JSON: expected an object");
	if (!data.contains("k") || !data["k"].is_number_integer()) {
		throw InputError("colouring JSON: missing integer field 'k'");
	}
	const int k = data["k"].get<int>();
	if (k < 1) throw InputError("colouring JSON: 'k' must be at least 1");
	for (const auto& [key, value] : data.items()) {
		if (key != "k" && key != "vertices" && key != "edges") {
			throw InputError("colouring JSON: unknown field '" + key + "'");
		}
		(void)value;
	}
	TotalColouring colouring(graph, k);
	const auto read_section = [&](const char* section, ElementKind kind, int limit) {
		if (!data.contains(section)) return;
		const auto& entries = data[section];
		if (!entries.is_object()) {
			throw InputError(std::string("colouring JSON: '") + section +
			                 "' must map ids to colours");
		}
		for (const auto& [key, value] : entries.items()) {
			const int id = parse_id(entries, key, limit, section);
			if (!value.is_number_integer()) {
				throw InputError("colouring JSON: colour of " + std::string(section) + " '" +
				                 key + "' is not an integer");
			}
			const int colour = value.get<int>();
			if (colour < 1 || colour > k) {
				throw InputError("colouring JSON: colour " + std::to_string(colour) + " of " +
				                 std::string(section) + " '" + key + "' is outside [1, " +
				                 std::to_string(k) + "]");
			}
			colouring.set(Element{kind, id}, colour);
		}
	};
	read_section("vertices", ElementKind::Vertex, graph.vertex_count());
	read_section("edges", ElementKind::Edge, graph.edge_count());
	return colouring;
}

TotalColouring read_colouring_file(const Graph& graph, const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InputError("cannot open colouring file: " + path);
	nlohmann::json data;
	try {
		in >> data;
	} catch (const nlohmann::json::exception& error) {
		throw InputError("colouring file " + path + ": " + error.what());
	}
	return colouring_from_json(graph, data);
}

namespace {

std::string dot_body(const Graph& graph, const TotalColouring* colouring) {
	std::ostringstream out;
	out << "graph total_colouring {\n";
	out << "\tnode [shape=circle];\n";
	for (int v = 0; v < graph.vertex_count(); ++v) {
		out << "\t" << v;
		if (colouring) {
			const auto colour = colouring->colour(Element::vertex(v));
			out << " [label=\"" << v << "\\n" << (colour ? std::to_string(*colour) : "-")
			    << "\"]";
		}
		out << ";\n";
	}
	for (int e = 0; e < graph.edge_count(); ++e) {
		const auto [u, v] = graph.endpoints(e);
		out << "\t" << u << " -- " << v;
		if (colouring) {
			const auto colour = colouring->colour(Element::edge(e));
			out << " [label=\"" << (colour ? std::to_string(*colour) : "-") << "\"]";
		}
		out << ";\n";
	}
	out << "}\n";
	return out.str();
}

}  // namespace

std::string to_dot(const Graph& graph) { return dot_body(graph, nullptr); }

std::string to_dot(const Graph& graph, const TotalColouring& colouring) {
	return dot_body(graph, &colouring);
}

}  // namespace totalb
