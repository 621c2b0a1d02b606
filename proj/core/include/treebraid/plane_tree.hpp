#pragma once

#include <map>
#include <vector>

#include "treebraid/errors.hpp"

namespace treebraid {

// Raw description of a rooted plane tree with arbitrary integer vertex ids.
// The order of each child list is the plane embedding (left to right).
struct TreeInput {
	int root = 0;
	std::map<int, std::vector<int>> children;
};

// Rooted plane tree with vertices renumbered in depth-first preorder,
// leftmost branch first.  The root is vertex 0 and must have degree exactly
// one, so its only child is vertex 1 and parent(v) < v for every non-root
// vertex.  Edges are identified by their child endpoint: edge k joins
// vertex k to parent(k), for k in [1, vertex_count()).
class PlaneTree {
public:
	// Empty placeholder; fill via assignment from one of the factories.
	PlaneTree() = default;

	// Renumbers `input` into canonical preorder.  Throws not_a_tree if the
	// description is not a tree reaching every mentioned vertex, and
	// root_degree_invalid if the root does not have degree exactly one.
	static PlaneTree from_input(const TreeInput& input);

	// Path on `vertices` vertices: 0 - 1 - ... - (vertices - 1).
	static PlaneTree path_tree(int vertices);

	// The 28-vertex minimal nonlinear example tree used throughout the test
	// corpus: four essential vertices (3, 9, 12, 21), each outer one
	// carrying two three-edge arms.  Preorder numbering is the identity.
	static PlaneTree canonical_t_min();

	int vertex_count() const { return static_cast<int>(parent_.size()); }
	int edge_count() const { return vertex_count() - 1; }
	int root() const { return 0; }
	int parent(int v) const { return parent_.at(v); }
	const std::vector<int>& children(int v) const { return children_.at(v); }
	int degree(int v) const;
	int depth(int v) const { return depth_.at(v); }

	// Original id carried over from the TreeInput (identity for built-ins).
	int original_label(int v) const { return labels_.at(v); }

	// True iff w lies in the subtree rooted at v (preorder interval test).
	bool in_subtree(int v, int w) const { return v <= w && w < subtree_end_.at(v); }

	// Endpoints of edge k as (child, parent).
	std::pair<int, int> edge_endpoints(int k) const;

	// Number of edges on the geodesic between u and v.
	int distance(int u, int v) const;

	// Direction of the first edge of the geodesic from v towards w:
	// 0 when it leaves towards the root, otherwise the 1-based index of the
	// child whose subtree contains w.  Throws same_vertex when v == w.
	int direction_index(int v, int w) const;

	// A vertex is essential when its degree is at least 3.
	bool is_essential(int v) const { return degree(v) >= 3; }
	std::vector<int> essential_vertices() const;

	// True when all essential vertices lie on a common embedded arc.
	bool is_linear() const;

	// True when every path between distinct vertices of degree != 2 crosses
	// at least n - 1 edges.  Requires n > 1 and at least n vertices
	// (too_few_vertices otherwise).
	bool is_sufficiently_subdivided(int n) const;

	// Returns a minimally refined tree that is sufficiently subdivided for
	// n strands: deficient arcs get extra degree-2 vertices spread as evenly
	// as possible.  Idempotent once sufficient.
	PlaneTree subdivide_for(int n) const;

	// Re-roots the tree at a degree-1 vertex, keeping the cyclic order of
	// edges around every vertex (the plane embedding is unchanged).
	// Vertex labels of the result refer to the current numbering.
	PlaneTree reroot_at_leaf(int leaf) const;

	bool operator==(const PlaneTree& other) const {
		return parent_ == other.parent_ && children_ == other.children_;
	}

private:
	void build_derived();

	std::vector<int> parent_;                 // parent_[0] == -1
	std::vector<std::vector<int>> children_;  // plane order
	std::vector<int> depth_;
	std::vector<int> subtree_end_;            // preorder interval [v, subtree_end_[v])
	std::vector<int> labels_;                 // original input ids
};

// Alias naming the renumbering step itself.
inline PlaneTree order_vertices(const TreeInput& input) { return PlaneTree::from_input(input); }

} // namespace treebraid
