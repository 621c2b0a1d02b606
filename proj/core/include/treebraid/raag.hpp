#pragma once

#include "treebraid/cup.hpp"

#include <set>

namespace treebraid {

// Finite abstract simplicial complex on vertices 0..vertex_count-1.
// Simplices are sorted vertex lists; the set contains all singletons and is
// closed under taking subsets.
struct SimplicialComplex {
	int vertex_count = 0;
	std::set<std::vector<int>> simplices;

	bool has(const std::vector<int>& simplex) const { return simplices.count(simplex) > 0; }
};

// Builds a complex from generating simplices: adds singletons and closes
// under subsets. Validates vertex ranges.
SimplicialComplex make_complex(int vertex_count, const std::vector<std::vector<int>>& generators);

// True iff every clique of the 1-skeleton is a simplex.
bool is_flag(const SimplicialComplex& complex);

// The clique complex of a simple graph.
SimplicialComplex flag_completion(int vertex_count, const std::vector<std::pair<int, int>>& edges);

enum class RaagReason { linear, few_strands, nonlinear_many_strands };

const char* raag_reason_name(RaagReason reason);

struct RaagVerdict {
	bool is_raag = false;
	RaagReason reason = RaagReason::nonlinear_many_strands;
};

// The tree braid group on n strands is right-angled Artin exactly when the
// tree is linear or n < 4.
RaagVerdict raag_status(const PlaneTree& tree, int n);

// A cellular embedding of a subdivided minimal nonlinear tree into a host
// tree. The host is rooted at the basepoint (vertex 0); the domain is the
// image subtree rooted at the sub-basepoint, which is the image vertex
// nearest the host root. The geodesic from the root to the sub-basepoint
// has exactly strands-4 edges, none of them image edges, and its vertices
// nearest the root serve as the filler members of mapped cells.
struct TreeEmbedding {
	PlaneTree host;
	PlaneTree domain;
	std::vector<int> vertex_map; // domain vertex -> host vertex
	int sub_basepoint = 0;       // host vertex carrying the domain root
	std::vector<int> fillers;    // strands-4 host vertices on [root, sub_basepoint]
	int strands = 4;
};

// Constructs an embedding into a nonlinear host: a maximal colinear set of
// essential vertices fixes an arc [w1, w2], an off-arc essential vertex w3
// meets the arc at w4, and the Y-graph spanned by w1..w4 is completed with
// two 3-edge segments at each of w1, w2, w3. The basepoint is the far end
// of a maximal arc leaving the image at one of its leaves; the host is
// re-rooted there when necessary. Ties are broken by smallest vertex
// number. Errors: host_linear, host_too_small, invalid_argument (n < 4).
TreeEmbedding embed_t_min(const PlaneTree& host, int n);

// Image of a 4-strand cell of the domain: mapped members plus the filler
// vertices. filler_collision signals a violated embedding invariant.
Cell theta_cell(const TreeEmbedding& emb, const Cell& cell);

struct TypePreservationReport {
	long long checked = 0;
	std::vector<std::pair<Cell, Cell>> failures; // (domain cell, host cell)

	bool all_pass() const { return failures.empty(); }
};

// Verifies classify(theta_cell(c)) == classify(c) for every domain cell of
// dimension <= max_dim.
TypePreservationReport check_type_preservation(const TreeEmbedding& emb, int max_dim);

struct NonFlagWitness {
	std::array<int, 3> triangle; // indices into the ring table's basis1
	std::vector<Cell> cells;
	std::string note;
};

// Searches the graph of nonzero pairwise products for a triangle whose
// triple product vanishes. Diagnostic only: it shows the ring is not the
// face algebra of a flag complex in this particular basis.
std::optional<NonFlagWitness> non_flag_witness(const CupContext& context, const RingTable& table);

} // namespace treebraid
