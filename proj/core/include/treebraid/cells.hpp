#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treebraid/plane_tree.hpp"

namespace treebraid {

// A cell of the discretized configuration space UD^n T: n members of the
// tree with pairwise disjoint closures, each member either a vertex or a
// closed edge.  The dimension is the number of edge members.
struct Cell {
	std::vector<int> vertices; // sorted vertex numbers
	std::vector<int> edges;    // sorted edge ids (child endpoints)

	int dim() const { return static_cast<int>(edges.size()); }
	int size() const { return static_cast<int>(vertices.size() + edges.size()); }

	// Member sequence codes, ascending: vertex v encodes as 2v, edge e as
	// 2e + 1, so members sort by their number with a stable tie rule.
	std::vector<int> codes() const;

	bool has_vertex(int v) const;
	bool has_edge(int e) const;

	bool operator==(const Cell&) const = default;
	bool operator<(const Cell& other) const;
};

struct CellHash {
	size_t operator()(const Cell& c) const;
};

// Throws unless the members are sorted, in range for the tree, and have
// pairwise disjoint closures.
void validate_cell(const PlaneTree& tree, const Cell& cell);

// Sorts, validates and returns the cell.
Cell make_cell(const PlaneTree& tree, std::vector<int> vertices, std::vector<int> edges);

// Text form: members ascending, e.g. "{v10, v13, e16, e19}" with "*" for the
// root vertex.  parse_cell accepts members in any order and "v0" for "*".
std::string format_cell(const Cell& cell);
Cell parse_cell(const PlaneTree& tree, std::string_view text);

enum class EdgeEnd { child, parent };

// Replaces each listed edge of the cell by one of its endpoints.
// Throws not_an_edge_of_cell if an id is not an edge member.
Cell break_edges(const PlaneTree& tree, const Cell& cell, const std::vector<int>& edge_subset,
                 const std::vector<EdgeEnd>& ends);

// Codimension-1 faces with incidence signs.  With the cell's edges ranked
// ascending and k counted from 1, replacing the k-th edge by its child
// endpoint carries (-1)^k and by its parent endpoint (-1)^(k+1); this makes
// the boundary of a 1-cell equal (parent face) - (child face) and squares
// to zero.  Throws zero_dimensional on 0-cells.
std::vector<std::pair<Cell, int>> faces_with_sign(const PlaneTree& tree, const Cell& cell);

// Integer cellular chain, a finite formal sum of same-dimension cells.
struct Chain {
	int dim = 0;
	std::map<Cell, int> terms;

	void add(const Cell& cell, int coefficient);
	bool is_zero() const { return terms.empty(); }
	bool operator==(const Chain&) const = default;
};

Chain boundary(const PlaneTree& tree, const Chain& chain);
Chain boundary(const PlaneTree& tree, const Cell& cell);

// Mod-2 cellular cochain, stored as its support.
struct Cochain {
	int dim = 0;
	std::set<Cell> support;

	bool contains(const Cell& cell) const { return support.count(cell) > 0; }
	// Evaluation against a chain, mod 2.
	int pair_mod2(const Chain& chain) const;
	void toggle(const Cell& cell);
	bool is_zero() const { return support.empty(); }
	bool operator==(const Cochain&) const = default;
};

// Symmetric difference (mod-2 sum) of two cochains of equal dimension.
Cochain add_mod2(const Cochain& a, const Cochain& b);

} // namespace treebraid
