#pragma once

#include <string>
#include <vector>

#include "treebraid/complex.hpp"

namespace treebraid {

enum class CellStatus { critical, redundant, collapsible };

const char* cell_status_name(CellStatus status);

// A vertex member v is blocked when it is the root or when the closure of
// the edge from v towards the root meets another member of the cell.
bool is_blocked(const PlaneTree& tree, int v, const Cell& cell);

// An edge member e is disrespectful when the cell contains a vertex w
// adjacent to parent(e) with parent(e) < w < e; such a w is the witness.
bool is_disrespectful(const PlaneTree& tree, int e, const Cell& cell);

// Scans the members in ascending order: the first unblocked vertex makes the
// cell redundant, the first respectful (not disrespectful) edge makes it
// collapsible, and a cell with neither is critical.
CellStatus classify(const PlaneTree& tree, const Cell& cell);

// Matching moves.  match_up replaces the minimal unblocked vertex v of a
// redundant cell by the edge from v towards the root; match_down replaces
// the minimal respectful edge of a collapsible cell by its child endpoint.
// They are mutually inverse.  Throws wrong_status on other cells.
Cell match_up(const PlaneTree& tree, const Cell& cell);
Cell match_down(const PlaneTree& tree, const Cell& cell);

// UD^n T together with the cached matching classification and the discrete
// gradient flow derived from it.
class MorseComplex {
public:
	MorseComplex(const PlaneTree& tree, int n);

	const Complex& complex() const { return complex_; }
	const PlaneTree& tree() const { return complex_.tree(); }
	int strands() const { return complex_.strands(); }

	CellStatus status(int dim, int idx) const;
	// Indices of critical cells of one dimension, ascending.
	const std::vector<int>& critical(int dim) const;
	std::vector<Cell> critical_cells(int dim) const;

	// One application of the flow 1 + d W + W d, where W lifts redundant
	// cells along the matching with the sign that cancels them out of the
	// boundary of their partner.
	Chain flow(const Chain& chain) const;

	// Iterates the flow to its stable value; the iteration count is capped
	// by the number of cells of the chain's dimension
	// (stabilization_guard_exceeded beyond that).
	Chain flow_infinity(const Chain& chain) const;
	Chain flow_infinity(const Cell& cell) const;

	// Boundary in the discrete Morse complex: the critical part of the
	// boundary of the stabilized flow.  Requires a critical cell.
	Chain morse_boundary(const Cell& cell) const;

	// Per-dimension critical cell counts for dims 0..n.  For trees the
	// Morse boundary vanishes, so these are the Betti numbers; the vanishing
	// is re-checked cell by cell (morse_boundary_nonzero on failure).
	std::vector<int> betti() const;

private:
	struct DimData {
		bool ready = false;
		std::vector<CellStatus> status;
		std::vector<int> critical;
		std::vector<int> partner_up;  // redundant idx -> idx in dim+1, else -1
		std::vector<int> lift_sign;   // sign of W on redundant cells, else 0
	};

	const DimData& dim_data(int dim) const;
	// Indexed chains: sparse (cell index -> coefficient) maps per dimension.
	using IChain = std::map<int, int>;
	IChain flow_indexed(int dim, const IChain& chain) const;
	IChain boundary_indexed(int dim, const IChain& chain) const;

	Complex complex_;
	mutable std::vector<DimData> dims_;
};

// Convenience wrapper: Betti numbers of UD^n T via the Morse matching.
std::vector<int> betti_numbers(const PlaneTree& tree, int n);

} // namespace treebraid
