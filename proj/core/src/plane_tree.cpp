#include "treebraid/plane_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace treebraid {

PlaneTree PlaneTree::from_input(const TreeInput& input) {
	// Collect the vertex id universe and check parent uniqueness.
	std::set<int> ids;
	ids.insert(input.root);
	std::map<int, int> parent_of;
	for (const auto& [v, kids] : input.children) {
		ids.insert(v);
		for (int c : kids) {
			ids.insert(c);
			if (c == input.root || parent_of.count(c))
				fail(ErrorCode::not_a_tree, "vertex " + std::to_string(c) + " has two parents or is the root");
			parent_of[c] = v;
		}
	}
	if (ids.size() < 2) fail(ErrorCode::not_a_tree, "a tree needs at least two vertices");

	auto children_of = [&](int v) -> const std::vector<int>& {
		static const std::vector<int> none;
		auto it = input.children.find(v);
		return it == input.children.end() ? none : it->second;
	};
	if (children_of(input.root).size() != 1)
		fail(ErrorCode::root_degree_invalid, "root must have degree exactly 1");

	PlaneTree t;
	t.parent_.assign(ids.size(), -1);
	t.children_.assign(ids.size(), {});
	t.labels_.assign(ids.size(), 0);

	// Iterative preorder walk, leftmost child first.
	std::map<int, int> number;
	std::vector<int> stack{input.root};
	int next = 0;
	while (!stack.empty()) {
		int v = stack.back();
		stack.pop_back();
		if (number.count(v)) fail(ErrorCode::not_a_tree, "cycle through vertex " + std::to_string(v));
		int num = next++;
		number[v] = num;
		t.labels_[num] = v;
		const auto& kids = children_of(v);
		for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
	}
	if (number.size() != ids.size()) fail(ErrorCode::not_a_tree, "not all vertices reachable from the root");

	for (const auto& [v, kids] : input.children) {
		for (int c : kids) {
			t.parent_[number[c]] = number[v];
			t.children_[number[v]].push_back(number[c]);
		}
	}
	t.build_derived();
	return t;
}

void PlaneTree::build_derived() {
	int n = vertex_count();
	depth_.assign(n, 0);
	subtree_end_.assign(n, 0);
	for (int v = 1; v < n; ++v) depth_[v] = depth_[parent_[v]] + 1;
	for (int v = n - 1; v >= 0; --v) {
		subtree_end_[v] = v + 1;
		for (int c : children_[v]) subtree_end_[v] = std::max(subtree_end_[v], subtree_end_[c]);
	}
}

PlaneTree PlaneTree::path_tree(int vertices) {
	if (vertices < 2) fail(ErrorCode::not_a_tree, "a path needs at least two vertices");
	TreeInput in;
	in.root = 0;
	for (int v = 0; v + 1 < vertices; ++v) in.children[v] = {v + 1};
	return from_input(in);
}

PlaneTree PlaneTree::canonical_t_min() {
	TreeInput in;
	in.root = 0;
	in.children = {
	    {0, {1}},   {1, {2}},   {2, {3}},   {3, {4, 7}},   {4, {5}},   {5, {6}},
	    {7, {8}},   {8, {9}},   {9, {10, 19}}, {10, {11}}, {11, {12}}, {12, {13, 16}},
	    {13, {14}}, {14, {15}}, {16, {17}}, {17, {18}},    {19, {20}}, {20, {21}},
	    {21, {22, 25}}, {22, {23}}, {23, {24}}, {25, {26}}, {26, {27}},
	};
	return from_input(in);
}

int PlaneTree::degree(int v) const {
	return static_cast<int>(children_.at(v).size()) + (v == 0 ? 0 : 1);
}

std::pair<int, int> PlaneTree::edge_endpoints(int k) const {
	if (k < 1 || k >= vertex_count())
		fail(ErrorCode::invalid_argument, "edge id out of range: " + std::to_string(k));
	return {k, parent_[k]};
}

int PlaneTree::distance(int u, int v) const {
	int d = 0, a = u, b = v;
	while (a != b) {
		if (depth_[a] >= depth_[b])
			a = parent_[a];
		else
			b = parent_[b];
		++d;
	}
	return d;
}

int PlaneTree::direction_index(int v, int w) const {
	if (v == w) fail(ErrorCode::same_vertex, "no direction from a vertex to itself");
	if (v == 0) return 0;
	const auto& kids = children_[v];
	for (size_t i = 0; i < kids.size(); ++i)
		if (in_subtree(kids[i], w)) return static_cast<int>(i) + 1;
	return 0;
}

std::vector<int> PlaneTree::essential_vertices() const {
	std::vector<int> out;
	for (int v = 0; v < vertex_count(); ++v)
		if (is_essential(v)) out.push_back(v);
	return out;
}

bool PlaneTree::is_linear() const {
	std::vector<int> ess = essential_vertices();
	if (ess.size() <= 2) return true;
	// The minimal subtree spanned by the essential vertices is a path iff
	// it has at most two leaves.  Mark all vertices on geodesics from each
	// essential vertex to the first one.
	std::vector<char> in_span(vertex_count(), 0);
	for (int e : ess) {
		int a = e, b = ess[0];
		while (a != b) {
			in_span[a] = in_span[b] = 1;
			if (depth_[a] >= depth_[b])
				a = parent_[a];
			else
				b = parent_[b];
		}
		in_span[a] = 1;
	}
	int leaves = 0;
	for (int v = 0; v < vertex_count(); ++v) {
		if (!in_span[v]) continue;
		int span_degree = 0;
		if (v != 0 && in_span[parent_[v]]) ++span_degree;
		for (int c : children_[v])
			if (in_span[c]) ++span_degree;
		if (span_degree <= 1) ++leaves;
	}
	return leaves <= 2;
}

bool PlaneTree::is_sufficiently_subdivided(int n) const {
	if (n <= 1) return true;
	if (vertex_count() < n)
		fail(ErrorCode::too_few_vertices, "tree has fewer vertices than strands");
	std::vector<int> special;
	for (int v = 0; v < vertex_count(); ++v)
		if (degree(v) != 2) special.push_back(v);
	for (size_t i = 0; i < special.size(); ++i)
		for (size_t j = i + 1; j < special.size(); ++j)
			if (distance(special[i], special[j]) < n - 1) return false;
	return true;
}

PlaneTree PlaneTree::subdivide_for(int n) const {
	if (n <= 1) fail(ErrorCode::invalid_argument, "subdivision needs n > 1");

	// Arcs run between consecutive degree-!= 2 vertices; fixing every arc to
	// length >= n - 1 fixes all special-vertex distances at once.
	struct Arc {
		std::vector<int> path; // from the parent-side endpoint down to the child-side one
	};
	std::vector<Arc> arcs;
	bool deficient = false;
	for (int v = 0; v < vertex_count(); ++v) {
		if (degree(v) == 2) continue;
		for (int c : children_[v]) {
			Arc arc;
			arc.path.push_back(v);
			int cur = c;
			while (degree(cur) == 2) {
				arc.path.push_back(cur);
				cur = children_[cur].front();
			}
			arc.path.push_back(cur);
			if (static_cast<int>(arc.path.size()) - 1 < n - 1) deficient = true;
			arcs.push_back(std::move(arc));
		}
	}
	if (!deficient) return *this;

	TreeInput in;
	in.root = 0;
	int fresh = vertex_count();
	for (const Arc& arc : arcs) {
		int arc_edges = static_cast<int>(arc.path.size()) - 1;
		int need = std::max(0, (n - 1) - arc_edges);
		int q = need / arc_edges, r = need % arc_edges;
		for (int i = 0; i < arc_edges; ++i) {
			int from = arc.path[i], to = arc.path[i + 1];
			int extra = q + (i < r ? 1 : 0);
			int prev = from;
			for (int k = 0; k < extra; ++k) {
				in.children[prev].push_back(fresh);
				prev = fresh++;
			}
			in.children[prev].push_back(to);
		}
	}
	return from_input(in);
}

PlaneTree PlaneTree::reroot_at_leaf(int leaf) const {
	if (degree(leaf) != 1) fail(ErrorCode::root_degree_invalid, "can only re-root at a degree-1 vertex");
	if (leaf == 0) return *this;

	// Cyclic neighbour order around v is [parent, child_1, ..., child_k];
	// after re-rooting, the children of v arriving from new parent p are the
	// cyclic successors of p in that list.
	auto cyclic = [&](int v) {
		std::vector<int> out;
		if (v != 0) out.push_back(parent_[v]);
		for (int c : children_[v]) out.push_back(c);
		return out;
	};

	TreeInput in;
	in.root = leaf;
	std::vector<std::pair<int, int>> stack{{leaf, -1}}; // (vertex, came-from)
	while (!stack.empty()) {
		auto [v, from] = stack.back();
		stack.pop_back();
		std::vector<int> order = cyclic(v);
		std::vector<int> kids;
		if (from < 0) {
			kids = order;
		} else {
			auto it = std::find(order.begin(), order.end(), from);
			for (size_t i = 1; i < order.size(); ++i)
				kids.push_back(order[(it - order.begin() + i) % order.size()]);
		}
		if (!kids.empty()) in.children[v] = kids;
		for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, v});
	}
	return from_input(in);
}

} // namespace treebraid
