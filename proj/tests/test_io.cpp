#include "doctest.h"

#include <string>

#include "totalb/closed_forms.hpp"
#include "totalb/errors.hpp"
#include "totalb/generators.hpp"
#include "totalb/io.hpp"

using namespace totalb;

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
	std::vector<std::pair<int, int>> edges;
	for (int e = 0; e < g.edge_count(); ++e) edges.push_back(g.endpoints(e));
	return edges;
}

void check_message(const char* text, const std::string& needle) {
	try {
		parse_graph_string(text);
		FAIL("expected InputError for: " << text);
	} catch (const InputError& error) {
		CHECK(std::string(error.what()).find(needle) != std::string::npos);
	}
}

}  // namespace

TEST_CASE("graph text round trips and preserves edge ids") {
	const Graph original = make_caterpillar({2, 0, 1});
	const Graph parsed = parse_graph_string(graph_to_string(original));
	CHECK(parsed.vertex_count() == original.vertex_count());
	CHECK(edge_list(parsed) == edge_list(original));
}

TEST_CASE("graph text accepts comments and blank lines") {
	const Graph g = parse_graph_string("c a triangle-free example\n\np 3 2\ne 0 1\nc midway\ne 1 2\n");
	CHECK(g.vertex_count() == 3);
	CHECK(g.edge_count() == 2);
}

TEST_CASE("graph text parse errors name the offending line") {
	check_message("e 0 1\n", "line 1: e line before the p line");
	check_message("p 3 2\np 3 2\n", "line 2: duplicate p line");
	check_message("p 3\n", "expected 'p <vertex count> <edge count>'");
	check_message("p 3 1\ne 0\n", "expected 'e <u> <v>'");
	check_message("p 3 1\nq 0 1\n", "unknown record 'q'");
	check_message("p 3 1\ne 0 1 9\n", "trailing data '9'");
	check_message("p 3 1\ne 0 0\n", "line 2");   // self-loop, rejected by the graph
	check_message("p 3 1\ne 0 7\n", "line 2");   // endpoint out of range
	check_message("p 3 2\ne 0 1\ne 0 1\n", "line 3");  // duplicate edge
	check_message("p 3 2\ne 0 1\n", "announces 2 edges but lists 1");
	check_message("", "no p line");
}

TEST_CASE("read_graph_file reports missing files") {
	CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("colouring JSON round trips complete and partial colourings") {
	const Graph g = make_path(4);
	const TotalColouring complete = colour_path(g);
	const TotalColouring reparsed = colouring_from_json(g, colouring_to_json(complete));
	CHECK(reparsed == complete);

	TotalColouring partial(g, 4);
	partial.set(Element::vertex(2), 3);
	partial.set(Element::edge(0), 1);
	const TotalColouring reparsed_partial = colouring_from_json(g, colouring_to_json(partial));
	CHECK(reparsed_partial == partial);
	CHECK(!reparsed_partial.is_complete());
}

TEST_CASE("colouring JSON serialisation is byte stable") {
	const Graph g = make_path(2);
	TotalColouring c(g, 3);
	c.set(Element::vertex(0), 1);
	c.set(Element::edge(0), 2);
	c.set(Element::vertex(1), 3);
	const std::string expected =
	    "{\n"
	    "  \"k\": 3,\n"
	    "  \"vertices\": {\n"
	    "    \"0\": 1,\n"
	    "    \"1\": 3\n"
	    "  },\n"
	    "  \"edges\": {\n"
	    "    \"0\": 2\n"
	    "  }\n"
	    "}\n";
	CHECK(colouring_to_json_string(c) == expected);
}

TEST_CASE("colouring JSON rejects malformed documents") {
	const Graph g = make_path(3);
	using nlohmann::json;
	CHECK_THROWS_AS(colouring_from_json(g, json::array()), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"vertices", json::object()}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 0}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"colours", json::object()}}),
	                InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"vertices", 5}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"vertices", {{"9", 1}}}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"vertices", {{"x", 1}}}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"vertices", {{"0", 4}}}}), InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"vertices", {{"0", "red"}}}}),
	                InputError);
	CHECK_THROWS_AS(colouring_from_json(g, json{{"k", 3}, {"edges", {{"0", 0}}}}), InputError);
}

TEST_CASE("read_colouring_file reports missing and invalid files") {
	const Graph g = make_path(3);
	CHECK_THROWS_AS(read_colouring_file(g, "/nonexistent/colouring.json"), InputError);
}

TEST_CASE("dot export lists vertices, edges and colours") {
	const Graph g = make_path(3);
	const std::string plain = to_dot(g);
	CHECK(plain.find("graph total_colouring {") != std::string::npos);
	CHECK(plain.find("0 -- 1;") != std::string::npos);
	CHECK(plain.find("1 -- 2;") != std::string::npos);

	TotalColouring c(g, 3);
	c.set(Element::vertex(0), 2);
	const std::string coloured = to_dot(g, c);
	CHECK(coloured.find("label=\"0\\n2\"") != std::string::npos);
	CHECK(coloured.find("label=\"-\"") != std::string::npos);  // unassigned edge
}
