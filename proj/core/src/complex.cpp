#include "treebraid/complex.hpp"

#include <algorithm>

namespace treebraid {

namespace {

void check_enumeration_args(const PlaneTree& tree, int n, int i) {
	if (n < 1) fail(ErrorCode::invalid_argument, "strand count must be at least 1");
	if (i < 0 || i > n) fail(ErrorCode::invalid_argument, "cell dimension out of range");
	if (!tree.is_sufficiently_subdivided(n))
		fail(ErrorCode::not_sufficiently_subdivided,
		     "tree is not sufficiently subdivided for " + std::to_string(n) + " strands");
}

// Walks all sets of `want` pairwise closure-disjoint edges with ids >= from,
// invoking emit(edges, used) where used marks blocked vertices.
template <typename Emit>
void walk_edge_sets(const PlaneTree& tree, int want, Emit&& emit) {
	std::vector<int> edges;
	std::vector<char> used(tree.vertex_count(), 0);
	auto rec = [&](auto&& self, int from) -> void {
		if (static_cast<int>(edges.size()) == want) {
			emit(edges, used);
			return;
		}
		for (int e = from; e < tree.vertex_count(); ++e) {
			int par = tree.parent(e);
			if (used[e] || used[par]) continue;
			used[e] = used[par] = 1;
			edges.push_back(e);
			self(self, e + 1);
			edges.pop_back();
			used[e] = used[par] = 0;
		}
	};
	rec(rec, 1);
}

long long binomial(long long n, long long k) {
	if (k < 0 || k > n) return 0;
	long long out = 1;
	for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
	return out;
}

} // namespace

std::vector<Cell> enumerate_cells(const PlaneTree& tree, int n, int i) {
	check_enumeration_args(tree, n, i);
	std::vector<Cell> out;
	int free_vertices = n - i;
	walk_edge_sets(tree, i, [&](const std::vector<int>& edges, const std::vector<char>& used) {
		std::vector<int> allowed;
		for (int v = 0; v < tree.vertex_count(); ++v)
			if (!used[v]) allowed.push_back(v);
		if (static_cast<int>(allowed.size()) < free_vertices) return;
		std::vector<int> pick;
		auto rec = [&](auto&& self, size_t from) -> void {
			if (static_cast<int>(pick.size()) == free_vertices) {
				out.push_back(Cell{pick, edges});
				return;
			}
			size_t still_needed = free_vertices - pick.size();
			for (size_t a = from; a + still_needed <= allowed.size(); ++a) {
				pick.push_back(allowed[a]);
				self(self, a + 1);
				pick.pop_back();
			}
		};
		rec(rec, 0);
	});
	std::sort(out.begin(), out.end());
	return out;
}

long long count_cells(const PlaneTree& tree, int n, int i) {
	check_enumeration_args(tree, n, i);
	long long total = 0;
	walk_edge_sets(tree, i, [&](const std::vector<int>&, const std::vector<char>&) {
		total += binomial(tree.vertex_count() - 2 * i, n - i);
	});
	return total;
}

Complex::Complex(const PlaneTree& tree, int n) : tree_(tree), n_(n) {
	if (n < 1) fail(ErrorCode::invalid_argument, "strand count must be at least 1");
	if (!tree_.is_sufficiently_subdivided(n))
		fail(ErrorCode::not_sufficiently_subdivided,
		     "tree is not sufficiently subdivided for " + std::to_string(n) + " strands");
	cells_.resize(n + 1);
	cells_ready_.assign(n + 1, 0);
	index_.resize(n + 1);
	faces_.resize(n + 1);
	faces_ready_.assign(n + 1, 0);
}

const std::vector<Cell>& Complex::cells(int dim) const {
	if (dim < 0 || dim > n_) fail(ErrorCode::invalid_argument, "cell dimension out of range");
	if (!cells_ready_[dim]) {
		cells_[dim] = enumerate_cells(tree_, n_, dim);
		index_[dim].reserve(cells_[dim].size() * 2);
		for (size_t i = 0; i < cells_[dim].size(); ++i)
			index_[dim].emplace(cells_[dim][i], static_cast<int>(i));
		cells_ready_[dim] = 1;
	}
	return cells_[dim];
}

long long Complex::cell_count(int dim) const {
	if (dim < 0 || dim > n_) fail(ErrorCode::invalid_argument, "cell dimension out of range");
	if (cells_ready_[dim]) return static_cast<long long>(cells_[dim].size());
	return count_cells(tree_, n_, dim);
}

int Complex::index_of(const Cell& cell, int dim) const {
	cells(dim);
	auto it = index_[dim].find(cell);
	return it == index_[dim].end() ? -1 : it->second;
}

const std::vector<std::pair<int, int>>& Complex::faces(int dim, int idx) const {
	if (dim < 1 || dim > n_) fail(ErrorCode::invalid_argument, "faces need dimension in 1..n");
	if (!faces_ready_[dim]) {
		const std::vector<Cell>& list = cells(dim);
		cells(dim - 1);
		faces_[dim].resize(list.size());
		for (size_t i = 0; i < list.size(); ++i) {
			auto faces_of = faces_with_sign(tree_, list[i]);
			faces_[dim][i].reserve(faces_of.size());
			for (auto& [face, sign] : faces_of) {
				int j = index_of(face, dim - 1);
				check_internal(j >= 0, "face of an enumerated cell must be enumerated");
				faces_[dim][i].emplace_back(j, sign);
			}
		}
		faces_ready_[dim] = 1;
	}
	return faces_[dim][idx];
}

Cochain coboundary(const Complex& complex, const Cochain& cochain) {
	for (const Cell& cell : cochain.support)
		if (cell.dim() != cochain.dim)
			fail(ErrorCode::dimension_mismatch, "cochain support has mixed dimensions");
	Cochain out;
	out.dim = cochain.dim + 1;
	if (cochain.dim + 1 > complex.strands()) return out;

	// Mark the support, then count support faces of every (dim+1)-cell.
	std::vector<char> in_support(complex.cells(cochain.dim).size(), 0);
	for (const Cell& cell : cochain.support) {
		int idx = complex.index_of(cell, cochain.dim);
		if (idx < 0) fail(ErrorCode::invalid_argument, "support cell is not a cell of the complex");
		in_support[idx] = 1;
	}
	const std::vector<Cell>& above = complex.cells(cochain.dim + 1);
	for (size_t i = 0; i < above.size(); ++i) {
		int parity = 0;
		for (auto [face, sign] : complex.faces(cochain.dim + 1, static_cast<int>(i)))
			parity ^= in_support[face];
		if (parity) out.support.insert(above[i]);
	}
	return out;
}

Cochain coboundary(const PlaneTree& tree, int n, const Cochain& cochain) {
	Complex complex(tree, n);
	return coboundary(complex, cochain);
}

} // namespace treebraid
