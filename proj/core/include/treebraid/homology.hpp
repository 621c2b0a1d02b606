#pragma once

#include "treebraid/complex.hpp"

namespace treebraid {

struct HomologyOptions {
	long long max_cells_per_dim = 200000;
	bool smith = false;
};

// Elementary-divisor summary of one integral boundary matrix.
struct SmithSummary {
	int boundary_dim = 0; // boundary map from this dimension down
	long long rank = 0;
	std::vector<long long> nonunit_divisors; // absolute values > 1, divisibility-ordered
};

// Brute-force homology of UD^n T from boundary-matrix ranks, independent of
// the Morse matching.
struct HomologyReport {
	int strands = 0;
	std::vector<long long> cell_counts;    // dims 0..n
	std::vector<long long> boundary_ranks; // mod-2 rank of the boundary from dim i
	std::vector<long long> betti_mod2;     // dims 0..n
	std::vector<long long> betti_integer;  // filled when Smith forms were computed
	std::vector<SmithSummary> smith;
	bool smith_computed = false;
	bool torsion_free = true; // certified only when smith_computed
};

// Exceeding max_cells_per_dim in any dimension raises resource_bound, as
// does integer overflow during exact reduction.
HomologyReport oracle_homology(const PlaneTree& tree, int n, const HomologyOptions& options = {});

// Rank of a matrix over GF(2); columns are sorted lists of row indices.
long long gf2_rank(std::vector<std::vector<int>> columns);

// Sparse integer column: (row, value) entries with ascending rows.
using IntColumn = std::vector<std::pair<int, long long>>;

// Elementary divisors (absolute values, divisibility-ordered, units
// included) of a sparse integer matrix. resource_bound on int64 overflow or
// when a residual dense reduction would exceed desk scale.
std::vector<long long> smith_diagonal(std::vector<IntColumn> columns);

} // namespace treebraid
