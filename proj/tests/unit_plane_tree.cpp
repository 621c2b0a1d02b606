#include <doctest.h>

#include "oracles.hpp"
#include "treebraid/plane_tree.hpp"
#include "treebraid/tree_io.hpp"

using namespace treebraid;
using treebraid::testing::h_tree;
using treebraid::testing::y_tree;

namespace {

#define CHECK_FAILS_WITH(expr, expected_code)                                                      \
	do {                                                                                           \
		try {                                                                                      \
			(void)(expr);                                                                          \
			FAIL("expected an error");                                                             \
		} catch (const Error& e) {                                                                 \
			CHECK(e.code() == (expected_code));                                                    \
		}                                                                                          \
	} while (0)

} // namespace

TEST_SUITE("plane_tree") {

TEST_CASE("path tree basics") {
	PlaneTree p = PlaneTree::path_tree(5);
	CHECK(p.vertex_count() == 5);
	CHECK(p.edge_count() == 4);
	CHECK(p.root() == 0);
	for (int v = 1; v < 5; ++v)
		CHECK(p.parent(v) == v - 1);
	CHECK(p.degree(0) == 1);
	CHECK(p.degree(2) == 2);
	CHECK(p.degree(4) == 1);
	CHECK(p.depth(4) == 4);
	CHECK(p.distance(1, 4) == 3);
	CHECK(p.is_linear());
	CHECK(p.essential_vertices().empty());
}

TEST_CASE("preorder renumbering is leftmost-first and keeps labels") {
	TreeInput input;
	input.root = 100;
	input.children[100] = {7};
	input.children[7] = {3, 50};
	input.children[3] = {12};
	PlaneTree t = PlaneTree::from_input(input);
	CHECK(t.vertex_count() == 5);
	CHECK(t.parent(1) == 0);
	CHECK(t.parent(2) == 1);
	CHECK(t.parent(3) == 2);
	CHECK(t.parent(4) == 1);
	CHECK(t.original_label(0) == 100);
	CHECK(t.original_label(1) == 7);
	CHECK(t.original_label(2) == 3);
	CHECK(t.original_label(3) == 12);
	CHECK(t.original_label(4) == 50);
	CHECK(t.children(1) == std::vector<int>{2, 4});
	// parent(v) < v holds for every non-root vertex by construction
	for (int v = 1; v < t.vertex_count(); ++v)
		CHECK(t.parent(v) < v);
	CHECK(order_vertices(input) == t);
}

TEST_CASE("malformed inputs are rejected") {
	TreeInput cycle;
	cycle.root = 0;
	cycle.children[0] = {1};
	cycle.children[1] = {2};
	cycle.children[2] = {1};
	CHECK_FAILS_WITH(PlaneTree::from_input(cycle), ErrorCode::not_a_tree);

	TreeInput disconnected;
	disconnected.root = 0;
	disconnected.children[0] = {1};
	disconnected.children[5] = {6};
	CHECK_FAILS_WITH(PlaneTree::from_input(disconnected), ErrorCode::not_a_tree);

	TreeInput two_parents;
	two_parents.root = 0;
	two_parents.children[0] = {1};
	two_parents.children[1] = {2};
	two_parents.children[2] = {3};
	two_parents.children[1].push_back(3);
	CHECK_FAILS_WITH(PlaneTree::from_input(two_parents), ErrorCode::not_a_tree);

	TreeInput lone;
	lone.root = 0;
	CHECK_FAILS_WITH(PlaneTree::from_input(lone), ErrorCode::not_a_tree);

	TreeInput forked_root;
	forked_root.root = 0;
	forked_root.children[0] = {1, 2};
	CHECK_FAILS_WITH(PlaneTree::from_input(forked_root), ErrorCode::root_degree_invalid);

	CHECK_FAILS_WITH(PlaneTree::path_tree(1), ErrorCode::not_a_tree);
}

TEST_CASE("the 28-vertex nonlinear example tree") {
	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(t.vertex_count() == 28);
	for (int v = 0; v < 28; ++v)
		CHECK(t.original_label(v) == v); // preorder numbering is the identity
	CHECK(t.essential_vertices() == std::vector<int>{3, 9, 12, 21});
	CHECK_FALSE(t.is_linear());
	CHECK(t.is_sufficiently_subdivided(4));
	CHECK_FALSE(t.is_sufficiently_subdivided(5));
	CHECK(t.children(3) == std::vector<int>{4, 7});
	CHECK(t.children(9) == std::vector<int>{10, 19});
	CHECK(t.children(12) == std::vector<int>{13, 16});
	CHECK(t.children(21) == std::vector<int>{22, 25});
	CHECK(t.degree(3) == 3);
	CHECK(t.degree(0) == 1);
	CHECK(t.depth(9) == 6);
	CHECK(t.distance(3, 9) == 3);
	CHECK(t.distance(6, 0) == 6);
	CHECK(t.distance(15, 18) == 6);
	CHECK(t.edge_endpoints(7) == std::pair<int, int>{7, 3});
	CHECK(t.edge_endpoints(19) == std::pair<int, int>{19, 9});
	CHECK(t.in_subtree(7, 27));
	CHECK_FALSE(t.in_subtree(4, 7));
}

TEST_CASE("direction index") {
	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(t.direction_index(3, 0) == 0);  // towards the root
	CHECK(t.direction_index(3, 5) == 1);  // into the first child subtree
	CHECK(t.direction_index(3, 27) == 2); // into the second child subtree
	CHECK(t.direction_index(9, 12) == 1);
	CHECK(t.direction_index(9, 21) == 2);
	CHECK(t.direction_index(9, 2) == 0);
	CHECK(t.direction_index(0, 27) == 0); // the root's single direction
	CHECK_FAILS_WITH(t.direction_index(5, 5), ErrorCode::same_vertex);
}

TEST_CASE("sample tree builders") {
	PlaneTree y = y_tree(3);
	CHECK(y.vertex_count() == 10);
	CHECK(y.essential_vertices() == std::vector<int>{3});
	CHECK(y.is_linear()); // one essential vertex always sits on an arc
	CHECK(y.is_sufficiently_subdivided(4));

	PlaneTree h = h_tree(3, 3);
	CHECK(h.vertex_count() == 16);
	CHECK(h.essential_vertices().size() == 2);
	CHECK(h.is_linear());
	CHECK(h.is_sufficiently_subdivided(4));
}

TEST_CASE("sufficient subdivision and refinement") {
	PlaneTree edge = PlaneTree::path_tree(2);
	CHECK(edge.is_sufficiently_subdivided(2));
	CHECK_FAILS_WITH(edge.is_sufficiently_subdivided(3), ErrorCode::too_few_vertices);
	CHECK(edge.subdivide_for(3) == PlaneTree::path_tree(3));
	CHECK(edge.is_sufficiently_subdivided(1)); // a single strand never needs room

	PlaneTree y = y_tree(1);
	CHECK(y.is_sufficiently_subdivided(2));
	CHECK_FALSE(y.is_sufficiently_subdivided(3));
	PlaneTree y4 = y.subdivide_for(4);
	CHECK(y4.is_sufficiently_subdivided(4));
	CHECK(y4.essential_vertices().size() == 1);
	CHECK(y4.subdivide_for(4) == y4); // idempotent once sufficient

	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(t.subdivide_for(4) == t);
	PlaneTree t5 = t.subdivide_for(5);
	CHECK(t5.is_sufficiently_subdivided(5));
	CHECK_FALSE(t5.is_linear());
	CHECK(t5.essential_vertices().size() == 4);
}

TEST_CASE("rerooting at a leaf keeps the plane embedding") {
	PlaneTree y = y_tree(1); // children 0:[1], 1:[2, 3]
	PlaneTree r = y.reroot_at_leaf(2);
	CHECK(r.vertex_count() == 4);
	CHECK(r.degree(0) == 1);
	// cyclic order around the branch vertex was (parent=0, 2, 3); rooted at
	// 2 it reads (3, 0) for the children
	CHECK(r.original_label(0) == 2);
	CHECK(r.original_label(1) == 1);
	CHECK(r.original_label(2) == 3);
	CHECK(r.original_label(3) == 0);

	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(t.reroot_at_leaf(0) == t);
	PlaneTree s = t.reroot_at_leaf(6);
	CHECK(s.vertex_count() == 28);
	CHECK(s.degree(0) == 1);
	CHECK_FALSE(s.is_linear());
	CHECK(s.essential_vertices().size() == 4);
	CHECK(s.original_label(0) == 6);
	CHECK_FAILS_WITH(t.reroot_at_leaf(3), ErrorCode::root_degree_invalid);
	// degrees are a re-rooting invariant, matched through the labels
	for (int v = 0; v < 28; ++v)
		CHECK(s.degree(v) == t.degree(s.original_label(v)));
}

TEST_CASE("json round trip") {
	PlaneTree t = PlaneTree::canonical_t_min();
	PlaneTree back = PlaneTree::from_input(parse_tree_json(tree_to_json(t)));
	CHECK(back == t);

	PlaneTree h = h_tree(2, 4);
	CHECK(PlaneTree::from_input(parse_tree_json(tree_to_json(h))) == h);

	CHECK(load_tree("tmin") == t);
	CHECK_FAILS_WITH(parse_tree_json("{"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_tree_json("[]"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_tree_json("{\"children\": {}}"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(load_tree("/nonexistent/tree.json"), ErrorCode::parse_error);
}

} // TEST_SUITE
