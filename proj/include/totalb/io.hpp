#ifndef TOTALB_IO_HPP
#define TOTALB_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "totalb/colouring.hpp"
#include "totalb/graph.hpp"

namespace totalb {

// Plain text graph format, one record per line:
//   c <free-form comment>
//   p <vertex count> <edge count>
//   e <u> <v>
// The p line comes before any e line; vertex ids are 0-based; edges receive
// ids in file order.  Parse failures throw InputError naming the line.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& graph);
std::string graph_to_string(const Graph& graph);

// Colouring JSON: {"k": 5, "vertices": {"0": 1, ...}, "edges": {"0": 2, ...}}
// with ids as object keys.  Serialisation lists ids in ascending order and is
// byte-stable; parsing accepts partial colourings (missing elements stay
// unassigned so the verifier can report them).
nlohmann::ordered_json colouring_to_json(const TotalColouring& colouring);
std::string colouring_to_json_string(const TotalColouring& colouring);
TotalColouring colouring_from_json(const Graph& graph, const nlohmann::json& data);
TotalColouring read_colouring_file(const Graph& graph, const std::string& path);

// Graphviz export; the coloured variant labels every vertex and edge with its
// colour.
std::string to_dot(const Graph& graph);
std::string to_dot(const Graph& graph, const TotalColouring& colouring);

}  // namespace totalb

#endif  // TOTALB_IO_HPP
