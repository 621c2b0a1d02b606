#include "treebraid/raag.hpp"

#include <algorithm>

namespace treebraid {

namespace {

// Path from a to b, inclusive, as consecutive host vertices.
std::vector<int> path_between(const PlaneTree& tree, int a, int b) {
	std::vector<int> from_a, from_b;
	int x = a, y = b;
	while (tree.depth(x) > tree.depth(y)) {
		from_a.push_back(x);
		x = tree.parent(x);
	}
	while (tree.depth(y) > tree.depth(x)) {
		from_b.push_back(y);
		y = tree.parent(y);
	}
	while (x != y) {
		from_a.push_back(x);
		from_b.push_back(y);
		x = tree.parent(x);
		y = tree.parent(y);
	}
	from_a.push_back(x);
	from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
	return from_a;
}

std::vector<int> neighbors_of(const PlaneTree& tree, int v) {
	std::vector<int> out;
	if (v != tree.root()) out.push_back(tree.parent(v));
	for (int c : tree.children(v)) out.push_back(c);
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

SimplicialComplex make_complex(int vertex_count, const std::vector<std::vector<int>>& generators) {
	if (vertex_count < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
	SimplicialComplex out;
	out.vertex_count = vertex_count;
	for (int v = 0; v < vertex_count; ++v) out.simplices.insert({v});
	for (const std::vector<int>& generator : generators) {
		std::vector<int> simplex = generator;
		std::sort(simplex.begin(), simplex.end());
		simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
		for (int v : simplex)
			if (v < 0 || v >= vertex_count)
				fail(ErrorCode::invalid_argument, "simplex vertex out of range");
		if (simplex.size() > 24) fail(ErrorCode::resource_bound, "simplex too large to close under subsets");
		for (uint32_t mask = 1; mask < (1u << simplex.size()); ++mask) {
			std::vector<int> face;
			for (size_t b = 0; b < simplex.size(); ++b)
				if (mask & (1u << b)) face.push_back(simplex[b]);
			out.simplices.insert(std::move(face));
		}
	}
	return out;
}

namespace {

// Visits every clique of size >= 1 of the graph, vertices ascending.
// Returns false early when the visitor reports failure.
template <typename Visit>
bool walk_cliques(int vertex_count, const std::vector<std::vector<char>>& adj, Visit&& visit) {
	std::vector<int> clique;
	auto rec = [&](auto&& self, int from) -> bool {
		if (!clique.empty() && !visit(clique)) return false;
		for (int v = from; v < vertex_count; ++v) {
			bool ok = true;
			for (int u : clique)
				if (!adj[u][v]) {
					ok = false;
					break;
				}
			if (!ok) continue;
			clique.push_back(v);
			if (!self(self, v + 1)) return false;
			clique.pop_back();
		}
		return true;
	};
	return rec(rec, 0);
}

std::vector<std::vector<char>> adjacency_of(const SimplicialComplex& complex) {
	std::vector<std::vector<char>> adj(complex.vertex_count,
	                                   std::vector<char>(complex.vertex_count, 0));
	for (const std::vector<int>& s : complex.simplices)
		if (s.size() == 2) adj[s[0]][s[1]] = adj[s[1]][s[0]] = 1;
	return adj;
}

} // namespace

bool is_flag(const SimplicialComplex& complex) {
	std::vector<std::vector<char>> adj = adjacency_of(complex);
	return walk_cliques(complex.vertex_count, adj, [&](const std::vector<int>& clique) {
		return clique.size() < 3 || complex.has(clique);
	});
}

SimplicialComplex flag_completion(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
	if (vertex_count < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
	std::vector<std::vector<char>> adj(vertex_count, std::vector<char>(vertex_count, 0));
	for (auto [a, b] : edges) {
		if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count || a == b)
			fail(ErrorCode::invalid_argument, "bad graph edge");
		adj[a][b] = adj[b][a] = 1;
	}
	SimplicialComplex out;
	out.vertex_count = vertex_count;
	walk_cliques(vertex_count, adj, [&](const std::vector<int>& clique) {
		out.simplices.insert(clique);
		return true;
	});
	return out;
}

const char* raag_reason_name(RaagReason reason) {
	switch (reason) {
	case RaagReason::linear: return "Linear";
	case RaagReason::few_strands: return "FewStrands";
	case RaagReason::nonlinear_many_strands: return "NonlinearManyStrands";
	}
	return "?";
}

RaagVerdict raag_status(const PlaneTree& tree, int n) {
	if (n < 1) fail(ErrorCode::invalid_argument, "strand count must be at least 1");
	if (n < 4) return {true, RaagReason::few_strands};
	if (tree.is_linear()) return {true, RaagReason::linear};
	return {false, RaagReason::nonlinear_many_strands};
}

TreeEmbedding embed_t_min(const PlaneTree& host, int n) {
	if (n < 4) fail(ErrorCode::invalid_argument, "embedding needs at least 4 strands");
	if (host.is_linear()) fail(ErrorCode::host_linear, "host tree is linear");
	std::vector<int> essential = host.essential_vertices();

	// Arc [w1, w2] through a maximum-cardinality colinear set of essential
	// vertices, ties by smallest endpoints.
	int w1 = -1, w2 = -1;
	size_t best = 0;
	for (size_t i = 0; i < essential.size(); ++i)
		for (size_t j = i + 1; j < essential.size(); ++j) {
			std::vector<int> path = path_between(host, essential[i], essential[j]);
			size_t count = 0;
			for (int v : path)
				if (host.is_essential(v)) ++count;
			if (count > best) {
				best = count;
				w1 = essential[i];
				w2 = essential[j];
			}
		}
	check_internal(w1 >= 0, "a nonlinear tree has at least two essential vertices");

	std::vector<int> arc = path_between(host, w1, w2);
	std::vector<char> on_arc(host.vertex_count(), 0);
	for (int v : arc) on_arc[v] = 1;
	int w3 = -1;
	for (int v : essential)
		if (!on_arc[v]) {
			w3 = v;
			break;
		}
	check_internal(w3 >= 0, "a nonlinear tree has an essential vertex off the arc");
	std::vector<int> gamma3 = path_between(host, w3, w1);
	int w4 = -1;
	for (int v : gamma3)
		if (on_arc[v]) {
			w4 = v;
			break;
		}
	check_internal(w4 >= 0 && host.is_essential(w4) && w4 != w1 && w4 != w2,
	               "the meet of the off-arc vertex must be an interior essential vertex");

	std::vector<char> in_image(host.vertex_count(), 0);
	auto add_path = [&](const std::vector<int>& path) {
		for (int v : path) in_image[v] = 1;
	};
	for (int wi : {w1, w2, w3}) {
		if (host.distance(w4, wi) < 3)
			fail(ErrorCode::host_too_small, "spoke shorter than 3 edges");
		add_path(path_between(host, w4, wi));
	}

	// Two 3-edge segments at each outer vertex, along the two smallest free
	// directions, walking towards smallest neighbors.
	std::vector<int> arm_tips;
	for (int wi : {w1, w2, w3}) {
		std::vector<int> free;
		for (int u : neighbors_of(host, wi))
			if (!in_image[u]) free.push_back(u);
		check_internal(free.size() >= 2, "essential outer vertices have two free directions");
		for (int d = 0; d < 2; ++d) {
			int prev = wi, cur = free[d];
			in_image[cur] = 1;
			for (int step = 1; step < 3; ++step) {
				int next = -1;
				for (int u : neighbors_of(host, cur))
					if (u != prev) {
						next = u;
						break;
					}
				if (next < 0) fail(ErrorCode::host_too_small, "arm runs into a leaf before 3 edges");
				prev = cur;
				cur = next;
				in_image[cur] = 1;
			}
			arm_tips.push_back(cur);
		}
	}
	std::sort(arm_tips.begin(), arm_tips.end());

	// Basepoint: from some image leaf, a maximal arc leaving the image ends
	// at a host leaf at distance >= n-4; the sub-basepoint sits on that arc
	// at distance exactly n-4 from its far end, absorbing the rest into the
	// image. Prefer keeping the current root as basepoint.
	struct Candidate {
		int tip = -1, star = -1, sbar = -1;
		std::vector<int> extension; // image vertices added beyond the tip
	};
	std::optional<Candidate> chosen;
	for (int tip : arm_tips) {
		std::vector<int> gamma{tip};
		int prev = -1, cur = tip;
		for (;;) {
			int next = -1;
			for (int u : neighbors_of(host, cur))
				if (u != prev && !in_image[u]) {
					next = u;
					break;
				}
			if (next < 0) break;
			prev = cur;
			cur = next;
			gamma.push_back(cur);
		}
		int length = static_cast<int>(gamma.size()) - 1;
		if (length == 0 && host.degree(tip) != 1) continue;
		if (length < n - 4) continue;
		Candidate c;
		c.tip = tip;
		c.star = gamma.back();
		c.sbar = gamma[length - (n - 4)];
		c.extension.assign(gamma.begin() + 1, gamma.begin() + (length - (n - 4)) + 1);
		bool better = !chosen || (c.star == host.root() && chosen->star != host.root());
		if (better) chosen = std::move(c);
		if (chosen->star == host.root()) break;
	}
	if (!chosen) fail(ErrorCode::host_too_small, "no basepoint arc of length at least n-4");
	for (int v : chosen->extension) in_image[v] = 1;

	TreeEmbedding emb;
	emb.strands = n;
	std::vector<int> to_new(host.vertex_count());
	if (chosen->star == host.root()) {
		emb.host = host;
		for (int v = 0; v < host.vertex_count(); ++v) to_new[v] = v;
	} else {
		emb.host = host.reroot_at_leaf(chosen->star);
		for (int v = 0; v < emb.host.vertex_count(); ++v)
			to_new[emb.host.original_label(v)] = v;
	}
	int sbar = to_new[chosen->sbar];
	emb.sub_basepoint = sbar;

	std::vector<char> image(emb.host.vertex_count(), 0);
	for (int v = 0; v < host.vertex_count(); ++v)
		if (in_image[v]) image[to_new[v]] = 1;

	TreeInput dom_in;
	dom_in.root = sbar;
	for (int v = 0; v < emb.host.vertex_count(); ++v) {
		if (!image[v]) continue;
		std::vector<int> kids;
		for (int c : emb.host.children(v))
			if (image[c]) kids.push_back(c);
		dom_in.children[v] = std::move(kids);
	}
	emb.domain = PlaneTree::from_input(dom_in);
	emb.vertex_map.resize(emb.domain.vertex_count());
	for (int v = 0; v < emb.domain.vertex_count(); ++v)
		emb.vertex_map[v] = emb.domain.original_label(v);

	check_internal(emb.host.depth(sbar) == n - 4, "sub-basepoint must sit n-4 edges from the root");
	for (int v = sbar; v != emb.host.root();) {
		v = emb.host.parent(v);
		check_internal(!image[v], "filler path must avoid the image");
		emb.fillers.push_back(v);
	}
	std::sort(emb.fillers.begin(), emb.fillers.end());
	if (!emb.domain.is_sufficiently_subdivided(4))
		fail(ErrorCode::host_too_small, "image is not sufficiently subdivided for 4 strands");
	return emb;
}

Cell theta_cell(const TreeEmbedding& emb, const Cell& cell) {
	if (cell.size() != 4) fail(ErrorCode::invalid_argument, "theta expects 4-strand cells");
	validate_cell(emb.domain, cell);
	Cell out;
	for (int v : cell.vertices) out.vertices.push_back(emb.vertex_map[v]);
	for (int f : emb.fillers) out.vertices.push_back(f);
	for (int e : cell.edges) {
		int child = emb.vertex_map[e];
		check_internal(emb.host.parent(child) == emb.vertex_map[emb.domain.parent(e)],
		               "embedding must preserve edge directions");
		out.edges.push_back(child);
	}
	std::sort(out.vertices.begin(), out.vertices.end());
	std::sort(out.edges.begin(), out.edges.end());
	try {
		validate_cell(emb.host, out);
	} catch (const Error&) {
		fail(ErrorCode::filler_collision, "filler vertices collide with mapped members");
	}
	return out;
}

TypePreservationReport check_type_preservation(const TreeEmbedding& emb, int max_dim) {
	TypePreservationReport report;
	for (int dim = 0; dim <= std::min(max_dim, 4); ++dim) {
		for (const Cell& cell : enumerate_cells(emb.domain, 4, dim)) {
			Cell image = theta_cell(emb, cell);
			++report.checked;
			if (classify(emb.domain, cell) != classify(emb.host, image) &&
			    report.failures.size() < 100)
				report.failures.emplace_back(cell, image);
		}
	}
	return report;
}

std::optional<NonFlagWitness> non_flag_witness(const CupContext& context, const RingTable& table) {
	int b1 = static_cast<int>(table.basis1.size());
	std::vector<std::vector<char>> adj(b1, std::vector<char>(b1, 0));
	for (const auto& [pair, product] : table.products)
		adj[pair.first][pair.second] = adj[pair.second][pair.first] = 1;
	for (int i = 0; i < b1; ++i)
		for (int j = i + 1; j < b1; ++j) {
			if (!adj[i][j]) continue;
			for (int k = j + 1; k < b1; ++k) {
				if (!adj[i][k] || !adj[j][k]) continue;
				DualBasisVector triple =
				    context.cup({table.basis1[i], table.basis1[j], table.basis1[k]});
				if (triple.is_zero()) {
					NonFlagWitness w;
					w.triangle = {i, j, k};
					w.cells = {table.basis1[i], table.basis1[j], table.basis1[k]};
					w.note = "pairwise products nonzero but the triple product vanishes; "
					         "the ring is not the face algebra of a flag complex in this basis";
					return w;
				}
			}
		}
	return std::nullopt;
}

} // namespace treebraid
