#ifndef TOTALB_ELEMENTS_HPP
#define TOTALB_ELEMENTS_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace totalb {

// A graph element is either a vertex or an edge.  Total colourings assign
// colours to both kinds, so most of the library is phrased in terms of
// elements rather than vertices alone.
enum class ElementKind : std::uint8_t { Vertex = 0, Edge = 1 };

struct Element {
	ElementKind kind;
	int id;

	static Element vertex(int id) { return Element{ElementKind::Vertex, id}; }
	static Element edge(int id) { return Element{ElementKind::Edge, id}; }

	bool is_vertex() const { return kind == ElementKind::Vertex; }
	bool is_edge() const { return kind == ElementKind::Edge; }

	// Canonical element order: vertices before edges, ids ascending.
	friend auto operator<=>(const Element& a, const Element& b) = default;
};

std::string to_string(const Element& e);

}  // namespace totalb

#endif  // TOTALB_ELEMENTS_HPP
