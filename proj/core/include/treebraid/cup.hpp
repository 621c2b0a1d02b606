#pragma once

#include "treebraid/morse.hpp"

#include <optional>
#include <unordered_map>

namespace treebraid {

// Equivalence class of a cell: its edge set together with how many vertex
// members fall in each component of the tree minus the closed edges.
// Components are keyed by their smallest vertex; every component is listed,
// including those holding no members, with keys ascending.
struct CellClass {
	std::vector<int> edges;
	std::vector<std::pair<int, int>> counts;

	int dim() const { return static_cast<int>(edges.size()); }
	int strands() const;

	bool operator==(const CellClass&) const = default;
	bool operator<(const CellClass& other) const {
		return std::tie(edges, counts) < std::tie(other.edges, other.counts);
	}
};

struct CellClassHash {
	size_t operator()(const CellClass& k) const;
};

std::string format_class(const CellClass& k);

// Connected components of the tree minus the closed edges. component_of maps
// each vertex to its component id (-1 for removed edge endpoints); keys are
// the smallest vertices per component, ascending; members are sorted.
struct ComponentSet {
	std::vector<int> component_of;
	std::vector<int> keys;
	std::vector<std::vector<int>> members;
};

ComponentSet split_at_edges(const PlaneTree& tree, const std::vector<int>& edges);

CellClass class_of(const PlaneTree& tree, const Cell& cell);

// Repeatedly moves the smallest unblocked vertex one edge towards the root
// until every vertex member is blocked. Preserves the class. Different move
// orders can end at different cells, but whenever the result is critical it
// is the unique all-blocked cell of the class.
Cell push_to_normal_form(const PlaneTree& tree, const Cell& cell);

// Some cell in the class: each component receives its count of lowest vertices.
Cell representative_of(const PlaneTree& tree, const CellClass& k);

// The critical cell of the class, when the class contains one.
std::optional<Cell> try_critical_representative(const PlaneTree& tree, const CellClass& k);

// a <= b: b can be turned into a by breaking edges of b (replacing an edge by
// one of its endpoints). Only defined between classes with equal strand count.
bool class_leq(const PlaneTree& tree, const CellClass& a, const CellClass& b);

// Least upper bound of distinct single-edge classes, when one exists.
std::optional<CellClass> lub(const PlaneTree& tree, const std::vector<CellClass>& ones);

// Same answer obtained by scanning every j-cell of the complex; cross-check.
std::optional<CellClass> lub_by_scan(const Complex& complex, const std::vector<CellClass>& ones);

// The single-edge classes obtained by breaking all edges but one.
std::vector<CellClass> one_classes_of(const PlaneTree& tree, const CellClass& k);

// Mod-2 coordinate vector over the dual basis of critical cells of one
// dimension (ascending cell order).
struct DualBasisVector {
	int dim = 0;
	std::vector<uint8_t> bits;

	bool is_zero() const;
	bool operator==(const DualBasisVector&) const = default;
};

// Shared state for mod-2 cohomology computations on one configuration space:
// interned cell classes per dimension and cached stable flows of the critical
// cells, which together make indicator cocycles and cup products cheap.
class CupContext {
public:
	CupContext(const PlaneTree& tree, int n);

	const PlaneTree& tree() const { return morse_.tree(); }
	int strands() const { return morse_.strands(); }
	const Complex& complex() const { return morse_.complex(); }
	const MorseComplex& morse() const { return morse_; }

	// Critical cells of the dimension, ascending; the dual basis order.
	const std::vector<Cell>& basis(int dim) const;

	int class_id(int dim, int cell_idx) const;
	const CellClass& class_by_id(int dim, int id) const;
	int find_class(const CellClass& k) const; // -1 when no cell has this class
	int class_count(int dim) const;

	// Indicator cochain of the class; verified to be a cocycle.
	Cochain phi_cocycle(const CellClass& k) const;

	// Coordinates of a cocycle over the dual basis: the coefficient on a
	// critical cell is the cochain evaluated on its stable flow, mod 2.
	DualBasisVector express_in_dual_basis(const Cochain& cochain) const;

	// express_in_dual_basis(phi_cocycle(k)) without re-verifying the cocycle
	// property, which holds structurally for class indicators.
	DualBasisVector express_indicator(const CellClass& k) const;

	// Mod-2 cup product of the duals of critical 1-cells: zero when two
	// inputs share a class or no least upper bound exists, otherwise the
	// indicator of the least upper bound expressed in the dual basis.
	DualBasisVector cup(const std::vector<Cell>& critical_one_cells) const;

private:
	struct ClassTable {
		bool ready = false;
		std::vector<int> id_of_cell;
		std::vector<CellClass> classes;
		std::unordered_map<CellClass, int, CellClassHash> index;
	};

	const ClassTable& class_table(int dim) const;
	const std::vector<Chain>& stable_chains(int dim) const;

	MorseComplex morse_;
	mutable std::vector<ClassTable> class_tables_;
	mutable std::vector<std::vector<Cell>> basis_cache_;
	mutable std::vector<char> flows_ready_;
	mutable std::vector<std::vector<Chain>> stable_chains_;
	// Per critical cell: (class id, parity) pairs of its stable flow, mod 2.
	mutable std::vector<std::vector<std::vector<std::pair<int, int>>>> flows_;
};

// All pairwise products of dual critical 1-cells, plus the rank of the
// mod-2 pairing x -> (y -> x cup y) and the dimension of its radical.
struct RingTable {
	std::vector<Cell> basis1;
	std::vector<Cell> basis2;
	std::map<std::pair<int, int>, DualBasisVector> products; // i < j, nonzero only
	int pairing_rank = 0;
	int radical_dim = 0;
};

RingTable ring_table(const CupContext& context);
RingTable ring_table(const PlaneTree& tree, int n);

// Abstract complex whose vertices are the single-edge classes and whose
// i-cells are the i-element subsets of distinct single-edge classes that
// possess an upper bound, labelled by their least upper bound.
struct HatComplex {
	struct HatCell {
		CellClass label;
		std::vector<int> vertex_ids;
	};

	std::vector<CellClass> vertices;
	std::vector<std::vector<HatCell>> cells; // by dimension, cells[0] unused
};

// max_dim < 0 builds all dimensions up to n.
HatComplex build_hat_complex(const PlaneTree& tree, int n, int max_dim = -1);

} // namespace treebraid
