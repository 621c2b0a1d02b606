#include "treebraid/cup.hpp"

#include <algorithm>
#include <map>

namespace treebraid {

namespace {

// Walks all sets of `want` pairwise closure-disjoint edges, ids ascending.
template <typename Emit>
void walk_edge_sets(const PlaneTree& tree, int want, Emit&& emit) {
	std::vector<int> edges;
	std::vector<char> used(tree.vertex_count(), 0);
	auto rec = [&](auto&& self, int from) -> void {
		if (static_cast<int>(edges.size()) == want) {
			emit(edges);
			return;
		}
		for (int e = from; e < tree.vertex_count(); ++e) {
			if (used[e] || used[tree.parent(e)]) continue;
			used[e] = used[tree.parent(e)] = 1;
			edges.push_back(e);
			self(self, e + 1);
			edges.pop_back();
			used[e] = used[tree.parent(e)] = 0;
		}
	};
	rec(rec, 1);
}

// Walks all ways to place `total` vertices into components with the given
// capacities.
template <typename Emit>
void walk_distributions(const std::vector<int>& capacities, int total, Emit&& emit) {
	std::vector<int> m(capacities.size(), 0);
	auto rec = [&](auto&& self, size_t at, int left) -> void {
		if (at == capacities.size()) {
			if (left == 0) emit(m);
			return;
		}
		int cap = std::min(capacities[at], left);
		for (int take = 0; take <= cap; ++take) {
			m[at] = take;
			self(self, at + 1, left - take);
		}
		m[at] = 0;
	};
	rec(rec, 0, total);
}

bool edges_closure_disjoint(const PlaneTree& tree, const std::vector<int>& edges) {
	std::vector<char> used(tree.vertex_count(), 0);
	for (int e : edges) {
		if (used[e] || used[tree.parent(e)]) return false;
		used[e] = used[tree.parent(e)] = 1;
	}
	return true;
}

} // namespace

int CellClass::strands() const {
	int total = dim();
	for (auto [key, count] : counts) total += count;
	return total;
}

size_t CellClassHash::operator()(const CellClass& k) const {
	uint64_t h = 1469598103934665603ull;
	auto mix = [&](uint64_t x) {
		h ^= x;
		h *= 1099511628211ull;
	};
	for (int e : k.edges) mix(static_cast<uint64_t>(e) | (1ull << 32));
	for (auto [key, count] : k.counts) mix(static_cast<uint64_t>(key) << 16 | static_cast<uint64_t>(count));
	return static_cast<size_t>(h);
}

std::string format_class(const CellClass& k) {
	std::string out = "{";
	bool first = true;
	for (int e : k.edges) {
		if (!first) out += ", ";
		first = false;
		out += "e" + std::to_string(e);
	}
	out += " | ";
	first = true;
	for (auto [key, count] : k.counts) {
		if (!first) out += ", ";
		first = false;
		out += (key == 0 ? std::string("*") : "v" + std::to_string(key)) + ":" + std::to_string(count);
	}
	out += "}";
	return out;
}

ComponentSet split_at_edges(const PlaneTree& tree, const std::vector<int>& edges) {
	int n_vertices = tree.vertex_count();
	std::vector<char> removed(n_vertices, 0);
	for (int e : edges) {
		auto [child, par] = tree.edge_endpoints(e);
		removed[child] = removed[par] = 1;
	}
	ComponentSet out;
	out.component_of.assign(n_vertices, -1);
	// Scanning vertices in ascending order makes each component's first
	// discovered vertex its smallest, so keys come out ascending.
	for (int start = 0; start < n_vertices; ++start) {
		if (removed[start] || out.component_of[start] >= 0) continue;
		int id = static_cast<int>(out.keys.size());
		out.keys.push_back(start);
		out.members.push_back({});
		std::vector<int> stack{start};
		out.component_of[start] = id;
		while (!stack.empty()) {
			int v = stack.back();
			stack.pop_back();
			out.members[id].push_back(v);
			auto visit = [&](int w) {
				if (w < 0 || removed[w] || out.component_of[w] >= 0) return;
				out.component_of[w] = id;
				stack.push_back(w);
			};
			visit(v == 0 ? -1 : tree.parent(v));
			for (int c : tree.children(v)) visit(c);
		}
		std::sort(out.members[id].begin(), out.members[id].end());
	}
	return out;
}

CellClass class_of(const PlaneTree& tree, const Cell& cell) {
	ComponentSet comps = split_at_edges(tree, cell.edges);
	CellClass out;
	out.edges = cell.edges;
	std::vector<int> tally(comps.keys.size(), 0);
	for (int v : cell.vertices) {
		check_internal(comps.component_of[v] >= 0, "cell vertex sits on a removed edge");
		++tally[comps.component_of[v]];
	}
	out.counts.reserve(comps.keys.size());
	for (size_t i = 0; i < comps.keys.size(); ++i) out.counts.emplace_back(comps.keys[i], tally[i]);
	return out;
}

Cell push_to_normal_form(const PlaneTree& tree, const Cell& cell) {
	Cell out = cell;
	for (;;) {
		int mover = -1;
		for (int v : out.vertices)
			if (!is_blocked(tree, v, out)) {
				mover = v;
				break;
			}
		if (mover < 0) return out;
		// An unblocked vertex can always step to its parent: the closure of
		// the edge towards the root meets no other member.
		out.vertices.erase(std::find(out.vertices.begin(), out.vertices.end(), mover));
		int par = tree.parent(mover);
		out.vertices.insert(std::upper_bound(out.vertices.begin(), out.vertices.end(), par), par);
	}
}

Cell representative_of(const PlaneTree& tree, const CellClass& k) {
	ComponentSet comps = split_at_edges(tree, k.edges);
	if (k.counts.size() != comps.keys.size())
		fail(ErrorCode::invalid_argument, "class must list every component of the split tree");
	Cell out;
	out.edges = k.edges;
	for (auto [key, count] : k.counts) {
		auto it = std::find(comps.keys.begin(), comps.keys.end(), key);
		if (it == comps.keys.end())
			fail(ErrorCode::invalid_argument, "class component key does not match the tree");
		const std::vector<int>& pool = comps.members[it - comps.keys.begin()];
		if (count > static_cast<int>(pool.size()))
			fail(ErrorCode::invalid_argument, "class count exceeds component size");
		out.vertices.insert(out.vertices.end(), pool.begin(), pool.begin() + count);
	}
	std::sort(out.vertices.begin(), out.vertices.end());
	validate_cell(tree, out);
	return out;
}

std::optional<Cell> try_critical_representative(const PlaneTree& tree, const CellClass& k) {
	Cell normal = push_to_normal_form(tree, representative_of(tree, k));
	if (classify(tree, normal) == CellStatus::critical) return normal;
	return std::nullopt;
}

bool class_leq(const PlaneTree& tree, const CellClass& a, const CellClass& b) {
	if (a.strands() != b.strands()) return false;
	if (!std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end())) return false;
	std::vector<int> extra;
	std::set_difference(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end(),
	                    std::back_inserter(extra));
	std::vector<EdgeEnd> ends(extra.size(), EdgeEnd::parent);
	Cell broken = break_edges(tree, representative_of(tree, b), extra, ends);
	return class_of(tree, broken) == a;
}

std::optional<CellClass> lub(const PlaneTree& tree, const std::vector<CellClass>& ones) {
	if (ones.empty()) fail(ErrorCode::invalid_argument, "least upper bound of nothing");
	for (const CellClass& k : ones)
		if (k.dim() != 1) fail(ErrorCode::mixed_dimensions, "lub inputs must be single-edge classes");
	for (size_t i = 0; i < ones.size(); ++i)
		for (size_t j = i + 1; j < ones.size(); ++j)
			if (ones[i] == ones[j]) fail(ErrorCode::duplicate_class, "lub inputs must be distinct");
	int n = ones[0].strands();
	for (const CellClass& k : ones)
		if (k.strands() != n) fail(ErrorCode::dimension_mismatch, "lub inputs disagree on strand count");

	int j = static_cast<int>(ones.size());
	std::vector<int> edge_union;
	for (const CellClass& k : ones) edge_union.push_back(k.edges[0]);
	std::sort(edge_union.begin(), edge_union.end());
	if (std::adjacent_find(edge_union.begin(), edge_union.end()) != edge_union.end())
		return std::nullopt; // distinct classes on a shared edge never have a common bound
	if (!edges_closure_disjoint(tree, edge_union)) return std::nullopt;

	ComponentSet fine = split_at_edges(tree, edge_union);
	std::vector<int> capacities;
	for (const auto& members : fine.members) capacities.push_back(static_cast<int>(members.size()));

	// For input i, group the fine components by the component of the tree
	// minus e_i they land in, and count the other edges landing there too.
	struct InputConstraints {
		std::vector<int> group_of_fine;     // fine component -> coarse component
		std::vector<int> base;              // broken-edge contributions per coarse component
		std::vector<int> required;          // counts demanded by the input class
	};
	std::vector<InputConstraints> constraints;
	for (const CellClass& k : ones) {
		ComponentSet coarse = split_at_edges(tree, k.edges);
		InputConstraints ic;
		ic.group_of_fine.resize(fine.keys.size());
		for (size_t f = 0; f < fine.keys.size(); ++f) {
			int g = coarse.component_of[fine.keys[f]];
			check_internal(g >= 0, "refined component must survive the single split");
			ic.group_of_fine[f] = g;
		}
		ic.base.assign(coarse.keys.size(), 0);
		for (int e : edge_union)
			if (e != k.edges[0]) ++ic.base[coarse.component_of[e]];
		ic.required.assign(coarse.keys.size(), 0);
		check_internal(k.counts.size() == coarse.keys.size(), "class counts match its component set");
		for (size_t c = 0; c < coarse.keys.size(); ++c) {
			check_internal(k.counts[c].first == coarse.keys[c], "class counts keyed canonically");
			ic.required[c] = k.counts[c].second;
		}
		constraints.push_back(std::move(ic));
	}

	std::vector<std::vector<int>> solutions;
	walk_distributions(capacities, n - j, [&](const std::vector<int>& m) {
		for (const InputConstraints& ic : constraints) {
			std::vector<int> got = ic.base;
			for (size_t f = 0; f < m.size(); ++f) got[ic.group_of_fine[f]] += m[f];
			if (got != ic.required) return;
		}
		solutions.push_back(m);
	});
	if (solutions.empty()) return std::nullopt;
	check_internal(solutions.size() == 1, "least upper bounds are unique");

	CellClass out;
	out.edges = edge_union;
	for (size_t f = 0; f < fine.keys.size(); ++f) out.counts.emplace_back(fine.keys[f], solutions[0][f]);
	return out;
}

std::optional<CellClass> lub_by_scan(const Complex& complex, const std::vector<CellClass>& ones) {
	int j = static_cast<int>(ones.size());
	if (j < 1 || j > complex.strands())
		fail(ErrorCode::invalid_argument, "scan dimension out of range");
	std::vector<CellClass> bounds;
	std::unordered_map<CellClass, char, CellClassHash> seen;
	for (const Cell& cell : complex.cells(j)) {
		CellClass k = class_of(complex.tree(), cell);
		if (!seen.emplace(k, 1).second) continue;
		bool upper = true;
		for (const CellClass& a : ones)
			if (!class_leq(complex.tree(), a, k)) {
				upper = false;
				break;
			}
		if (upper) bounds.push_back(std::move(k));
	}
	if (bounds.empty()) return std::nullopt;
	check_internal(bounds.size() == 1, "j-dimensional upper bounds are unique");
	return bounds[0];
}

std::vector<CellClass> one_classes_of(const PlaneTree& tree, const CellClass& k) {
	Cell rep = representative_of(tree, k);
	std::vector<CellClass> out;
	for (int e : k.edges) {
		std::vector<int> others;
		for (int f : k.edges)
			if (f != e) others.push_back(f);
		std::vector<EdgeEnd> ends(others.size(), EdgeEnd::parent);
		out.push_back(class_of(tree, break_edges(tree, rep, others, ends)));
	}
	return out;
}

bool DualBasisVector::is_zero() const {
	return std::all_of(bits.begin(), bits.end(), [](uint8_t b) { return b == 0; });
}

CupContext::CupContext(const PlaneTree& tree, int n) : morse_(tree, n) {
	class_tables_.resize(n + 1);
	flows_ready_.assign(n + 1, 0);
	flows_.resize(n + 1);
	stable_chains_.resize(n + 1);
}

const std::vector<Cell>& CupContext::basis(int dim) const {
	static const std::vector<Cell> empty;
	if (dim < 0 || dim > strands()) return empty;
	basis_cache_.resize(strands() + 1);
	if (basis_cache_[dim].empty() && !morse_.critical(dim).empty())
		basis_cache_[dim] = morse_.critical_cells(dim);
	return basis_cache_[dim];
}

const CupContext::ClassTable& CupContext::class_table(int dim) const {
	if (dim < 0 || dim > strands()) fail(ErrorCode::invalid_argument, "dimension out of range");
	ClassTable& table = class_tables_[dim];
	if (table.ready) return table;
	const std::vector<Cell>& list = complex().cells(dim);
	table.id_of_cell.resize(list.size());
	// Cells sharing an edge set share the component split; cache it.
	std::map<std::vector<int>, ComponentSet> splits;
	for (size_t i = 0; i < list.size(); ++i) {
		auto [it, inserted] = splits.try_emplace(list[i].edges);
		if (inserted) it->second = split_at_edges(tree(), list[i].edges);
		const ComponentSet& comps = it->second;
		CellClass k;
		k.edges = list[i].edges;
		std::vector<int> tally(comps.keys.size(), 0);
		for (int v : list[i].vertices) ++tally[comps.component_of[v]];
		for (size_t c = 0; c < comps.keys.size(); ++c) k.counts.emplace_back(comps.keys[c], tally[c]);
		auto [kit, fresh] = table.index.try_emplace(k, static_cast<int>(table.classes.size()));
		if (fresh) table.classes.push_back(std::move(k));
		table.id_of_cell[i] = kit->second;
	}
	table.ready = true;
	return table;
}

int CupContext::class_id(int dim, int cell_idx) const { return class_table(dim).id_of_cell.at(cell_idx); }

const CellClass& CupContext::class_by_id(int dim, int id) const {
	return class_table(dim).classes.at(id);
}

int CupContext::find_class(const CellClass& k) const {
	const ClassTable& table = class_table(k.dim());
	auto it = table.index.find(k);
	return it == table.index.end() ? -1 : it->second;
}

int CupContext::class_count(int dim) const {
	return static_cast<int>(class_table(dim).classes.size());
}

const std::vector<Chain>& CupContext::stable_chains(int dim) const {
	if (dim < 0 || dim > strands()) fail(ErrorCode::invalid_argument, "dimension out of range");
	if (!flows_ready_[dim]) {
		const std::vector<Cell>& crit = basis(dim);
		stable_chains_[dim].reserve(crit.size());
		flows_[dim].reserve(crit.size());
		for (const Cell& cell : crit) {
			Chain stable = morse_.flow_infinity(cell);
			// Aggregate the mod-2 class content once; products only need it.
			std::map<int, int> parity;
			for (const auto& [term, coefficient] : stable.terms) {
				int idx = complex().index_of(term, dim);
				parity[class_id(dim, idx)] ^= (coefficient & 1);
			}
			std::vector<std::pair<int, int>> packed;
			for (auto [id, par] : parity)
				if (par) packed.emplace_back(id, par);
			flows_[dim].push_back(std::move(packed));
			stable_chains_[dim].push_back(std::move(stable));
		}
		flows_ready_[dim] = 1;
	}
	return stable_chains_[dim];
}

Cochain CupContext::phi_cocycle(const CellClass& k) const {
	int dim = k.dim();
	Cochain out;
	out.dim = dim;
	if (dim > strands()) return out;
	int id = find_class(k);
	if (id >= 0) {
		const ClassTable& table = class_table(dim);
		const std::vector<Cell>& list = complex().cells(dim);
		for (size_t i = 0; i < list.size(); ++i)
			if (table.id_of_cell[i] == id) out.support.insert(list[i]);
	}
	if (!coboundary(complex(), out).is_zero())
		fail(ErrorCode::not_a_cocycle, "class indicator failed the cocycle check");
	return out;
}

DualBasisVector CupContext::express_in_dual_basis(const Cochain& cochain) const {
	if (cochain.dim < 0 || cochain.dim > strands())
		fail(ErrorCode::invalid_argument, "cochain dimension out of range");
	if (cochain.dim < strands() && !coboundary(complex(), cochain).is_zero())
		fail(ErrorCode::not_a_cocycle, "express_in_dual_basis needs a cocycle");
	const std::vector<Chain>& stable = stable_chains(cochain.dim);
	DualBasisVector out;
	out.dim = cochain.dim;
	out.bits.resize(stable.size());
	for (size_t i = 0; i < stable.size(); ++i)
		out.bits[i] = static_cast<uint8_t>(cochain.pair_mod2(stable[i]));
	return out;
}

DualBasisVector CupContext::express_indicator(const CellClass& k) const {
	int dim = k.dim();
	stable_chains(dim);
	int id = find_class(k);
	DualBasisVector out;
	out.dim = dim;
	out.bits.assign(basis(dim).size(), 0);
	if (id < 0) return out;
	for (size_t i = 0; i < flows_[dim].size(); ++i)
		for (auto [cid, par] : flows_[dim][i])
			if (cid == id) out.bits[i] ^= static_cast<uint8_t>(par);
	return out;
}

DualBasisVector CupContext::cup(const std::vector<Cell>& critical_one_cells) const {
	int arity = static_cast<int>(critical_one_cells.size());
	if (arity < 1 || arity > strands())
		fail(ErrorCode::invalid_argument, "cup arity must be between 1 and the strand count");
	std::vector<CellClass> classes;
	for (const Cell& cell : critical_one_cells) {
		if (cell.dim() != 1 || classify(tree(), cell) != CellStatus::critical)
			fail(ErrorCode::wrong_status, "cup inputs must be critical 1-cells");
		classes.push_back(class_of(tree(), cell));
	}
	DualBasisVector zero;
	zero.dim = arity;
	zero.bits.assign(basis(arity).size(), 0);
	for (size_t i = 0; i < classes.size(); ++i)
		for (size_t j = i + 1; j < classes.size(); ++j)
			if (classes[i] == classes[j]) return zero;
	std::optional<CellClass> bound = lub(tree(), classes);
	if (!bound) return zero;
	return express_indicator(*bound);
}

RingTable ring_table(const CupContext& context) {
	RingTable out;
	out.basis1 = context.basis(1);
	out.basis2 = context.basis(2);
	int b1 = static_cast<int>(out.basis1.size());
	int b2 = static_cast<int>(out.basis2.size());
	for (int i = 0; i < b1; ++i)
		for (int j = i + 1; j < b1; ++j) {
			DualBasisVector product = context.cup({out.basis1[i], out.basis1[j]});
			if (!product.is_zero()) out.products.emplace(std::pair{i, j}, std::move(product));
		}

	// Pairing rank over GF(2): rows are basis1 duals, columns (y, z) pairs.
	std::vector<std::vector<uint64_t>> rows(b1);
	int columns = b1 * std::max(b2, 1);
	int words = (columns + 63) / 64;
	for (auto& row : rows) row.assign(words, 0);
	for (const auto& [pair, product] : out.products)
		for (int z = 0; z < b2; ++z) {
			if (!product.bits[z]) continue;
			auto set_bit = [&](int x, int y) {
				int column = y * b2 + z;
				rows[x][column / 64] |= 1ull << (column % 64);
			};
			set_bit(pair.first, pair.second);
			set_bit(pair.second, pair.first);
		}
	int rank = 0;
	std::vector<std::vector<uint64_t>> reduced;
	for (auto row : rows) {
		for (const auto& pivot : reduced) {
			// Reduce by the leading bit of each pivot row.
			for (int w = 0; w < words; ++w)
				if (pivot[w]) {
					uint64_t lead = pivot[w] & ~(pivot[w] - 1);
					if (row[w] & lead)
						for (int u = 0; u < words; ++u) row[u] ^= pivot[u];
					break;
				}
		}
		if (std::any_of(row.begin(), row.end(), [](uint64_t w) { return w != 0; })) {
			reduced.push_back(row);
			++rank;
		}
	}
	out.pairing_rank = rank;
	out.radical_dim = b1 - rank;
	return out;
}

RingTable ring_table(const PlaneTree& tree, int n) {
	CupContext context(tree, n);
	return ring_table(context);
}

HatComplex build_hat_complex(const PlaneTree& tree, int n, int max_dim) {
	if (n < 1) fail(ErrorCode::invalid_argument, "strand count must be at least 1");
	if (max_dim < 0 || max_dim > n) max_dim = n;
	HatComplex out;
	// vertex_lists[e] = ids of the hat vertices whose edge is e.
	std::vector<std::vector<int>> vertex_lists(tree.vertex_count());
	walk_edge_sets(tree, 1, [&](const std::vector<int>& edges) {
		ComponentSet comps = split_at_edges(tree, edges);
		std::vector<int> capacities;
		for (const auto& members : comps.members) capacities.push_back(static_cast<int>(members.size()));
		walk_distributions(capacities, n - 1, [&](const std::vector<int>& m) {
			CellClass k;
			k.edges = edges;
			for (size_t c = 0; c < comps.keys.size(); ++c) k.counts.emplace_back(comps.keys[c], m[c]);
			vertex_lists[edges[0]].push_back(static_cast<int>(out.vertices.size()));
			out.vertices.push_back(std::move(k));
		});
	});

	out.cells.resize(max_dim + 1);
	for (int i = 1; i <= max_dim; ++i) {
		// Only subsets with pairwise disjoint edges can have an upper bound,
		// so walk disjoint edge sets and pick one class per edge.
		walk_edge_sets(tree, i, [&](const std::vector<int>& edges) {
			std::vector<int> pick(edges.size(), 0);
			auto rec = [&](auto&& self, size_t at) -> void {
				if (at == edges.size()) {
					std::vector<CellClass> chosen;
					for (size_t p = 0; p < edges.size(); ++p)
						chosen.push_back(out.vertices[vertex_lists[edges[p]][pick[p]]]);
					std::optional<CellClass> bound = lub(tree, chosen);
					if (!bound) return;
					HatComplex::HatCell cell;
					cell.label = std::move(*bound);
					for (size_t p = 0; p < edges.size(); ++p)
						cell.vertex_ids.push_back(vertex_lists[edges[p]][pick[p]]);
					std::sort(cell.vertex_ids.begin(), cell.vertex_ids.end());
					out.cells[i].push_back(std::move(cell));
					return;
				}
				for (size_t v = 0; v < vertex_lists[edges[at]].size(); ++v) {
					pick[at] = static_cast<int>(v);
					self(self, at + 1);
				}
			};
			rec(rec, 0);
		});
	}
	return out;
}

} // namespace treebraid
