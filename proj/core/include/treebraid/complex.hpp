#pragma once

#include <unordered_map>
#include <vector>

#include "treebraid/cells.hpp"

namespace treebraid {

// All i-cells of UD^n T in ascending member-sequence order.  Requires the
// tree to be sufficiently subdivided for n.
std::vector<Cell> enumerate_cells(const PlaneTree& tree, int n, int i);

// Number of i-cells, computed without materializing them.
long long count_cells(const PlaneTree& tree, int n, int i);

// The discretized configuration space UD^n T with per-dimension cell lists,
// cell indices and face tables, filled lazily.  Read-only after warm-up;
// build one per (tree, n) pair and share it.
class Complex {
public:
	Complex(const PlaneTree& tree, int n);

	const PlaneTree& tree() const { return tree_; }
	int strands() const { return n_; }

	// Cells of one dimension, lexicographically sorted; dims run 0..n and
	// high dimensions may be empty.
	const std::vector<Cell>& cells(int dim) const;
	long long cell_count(int dim) const;

	// Index of a cell within cells(dim), or -1 when absent.
	int index_of(const Cell& cell, int dim) const;

	// Faces of cells(dim)[idx] as (index in dim-1, incidence sign), in the
	// order produced by faces_with_sign.
	const std::vector<std::pair<int, int>>& faces(int dim, int idx) const;

private:
	PlaneTree tree_;
	int n_;
	mutable std::vector<std::vector<Cell>> cells_;
	mutable std::vector<char> cells_ready_;
	mutable std::vector<std::unordered_map<Cell, int, CellHash>> index_;
	mutable std::vector<std::vector<std::vector<std::pair<int, int>>>> faces_;
	mutable std::vector<char> faces_ready_;
};

// Mod-2 coboundary: the support of the (dim+1)-cochain pairing cells with an
// odd number of support faces.  Checks that all support cells have the
// cochain's dimension.
Cochain coboundary(const Complex& complex, const Cochain& cochain);
Cochain coboundary(const PlaneTree& tree, int n, const Cochain& cochain);

} // namespace treebraid
