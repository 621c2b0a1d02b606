#include "treebraid/morse.hpp"

#include <algorithm>

namespace treebraid {

const char* cell_status_name(CellStatus status) {
	switch (status) {
		case CellStatus::critical: return "critical";
		case CellStatus::redundant: return "redundant";
		case CellStatus::collapsible: return "collapsible";
	}
	return "?";
}

bool is_blocked(const PlaneTree& tree, int v, const Cell& cell) {
	if (!cell.has_vertex(v)) fail(ErrorCode::vertex_not_in_cell, "vertex is not a member of the cell");
	if (v == tree.root()) return true;
	int par = tree.parent(v);
	// The closure of [v, parent(v)] meets another member iff that member
	// contains parent(v); it cannot contain v, the members being disjoint.
	if (cell.has_vertex(par)) return true;
	for (int e : cell.edges) {
		auto [child, p] = tree.edge_endpoints(e);
		if (child == par || p == par) return true;
	}
	return false;
}

bool is_disrespectful(const PlaneTree& tree, int e, const Cell& cell) {
	if (!cell.has_edge(e)) fail(ErrorCode::edge_not_in_cell, "edge is not a member of the cell");
	int par = tree.parent(e);
	// A witness is a cell vertex adjacent to parent(e) strictly between the
	// endpoints; only children of parent(e) can satisfy parent(e) < w.
	for (int w : tree.children(par))
		if (w < e && cell.has_vertex(w)) return true;
	return false;
}

CellStatus classify(const PlaneTree& tree, const Cell& cell) {
	auto vi = cell.vertices.begin();
	auto ei = cell.edges.begin();
	while (vi != cell.vertices.end() || ei != cell.edges.end()) {
		bool take_vertex =
		    ei == cell.edges.end() || (vi != cell.vertices.end() && *vi < *ei);
		if (take_vertex) {
			if (!is_blocked(tree, *vi, cell)) return CellStatus::redundant;
			++vi;
		} else {
			if (!is_disrespectful(tree, *ei, cell)) return CellStatus::collapsible;
			++ei;
		}
	}
	return CellStatus::critical;
}

Cell match_up(const PlaneTree& tree, const Cell& cell) {
	if (classify(tree, cell) != CellStatus::redundant)
		fail(ErrorCode::wrong_status, "match_up needs a redundant cell");
	for (int v : cell.vertices) {
		if (is_blocked(tree, v, cell)) continue;
		Cell out = cell;
		out.vertices.erase(std::find(out.vertices.begin(), out.vertices.end(), v));
		out.edges.insert(std::upper_bound(out.edges.begin(), out.edges.end(), v), v);
		return out;
	}
	fail(ErrorCode::internal_check_failed, "redundant cell without unblocked vertex");
}

Cell match_down(const PlaneTree& tree, const Cell& cell) {
	if (classify(tree, cell) != CellStatus::collapsible)
		fail(ErrorCode::wrong_status, "match_down needs a collapsible cell");
	for (int e : cell.edges) {
		if (is_disrespectful(tree, e, cell)) continue;
		Cell out = cell;
		out.edges.erase(std::find(out.edges.begin(), out.edges.end(), e));
		out.vertices.insert(std::upper_bound(out.vertices.begin(), out.vertices.end(), e), e);
		return out;
	}
	fail(ErrorCode::internal_check_failed, "collapsible cell without respectful edge");
}

MorseComplex::MorseComplex(const PlaneTree& tree, int n) : complex_(tree, n) {
	dims_.resize(n + 1);
}

const MorseComplex::DimData& MorseComplex::dim_data(int dim) const {
	if (dim < 0 || dim > strands()) fail(ErrorCode::invalid_argument, "dimension out of range");
	DimData& data = dims_[dim];
	if (data.ready) return data;
	const std::vector<Cell>& list = complex_.cells(dim);
	data.status.resize(list.size());
	data.partner_up.assign(list.size(), -1);
	data.lift_sign.assign(list.size(), 0);
	for (size_t i = 0; i < list.size(); ++i) {
		data.status[i] = classify(tree(), list[i]);
		if (data.status[i] == CellStatus::critical) data.critical.push_back(static_cast<int>(i));
		if (data.status[i] != CellStatus::redundant) continue;
		Cell up = match_up(tree(), list[i]);
		int up_idx = complex_.index_of(up, dim + 1);
		check_internal(up_idx >= 0, "matched cell must be a cell of the complex");
		data.partner_up[i] = up_idx;
		// W must cancel the cell out of the boundary of its partner, so its
		// sign is minus the incidence of the cell in that boundary.
		int incidence = 0;
		for (auto [face, sign] : complex_.faces(dim + 1, up_idx))
			if (face == static_cast<int>(i)) incidence += sign;
		check_internal(incidence == 1 || incidence == -1, "matched pair must be incident once");
		data.lift_sign[i] = -incidence;
	}
	data.ready = true;
	return data;
}

CellStatus MorseComplex::status(int dim, int idx) const { return dim_data(dim).status.at(idx); }

const std::vector<int>& MorseComplex::critical(int dim) const { return dim_data(dim).critical; }

std::vector<Cell> MorseComplex::critical_cells(int dim) const {
	std::vector<Cell> out;
	for (int idx : critical(dim)) out.push_back(complex_.cells(dim)[idx]);
	return out;
}

MorseComplex::IChain MorseComplex::boundary_indexed(int dim, const IChain& chain) const {
	IChain out;
	for (auto [idx, coefficient] : chain)
		for (auto [face, sign] : complex_.faces(dim, idx)) {
			int& slot = out[face];
			slot += sign * coefficient;
			if (slot == 0) out.erase(face);
		}
	return out;
}

MorseComplex::IChain MorseComplex::flow_indexed(int dim, const IChain& chain) const {
	const DimData& here = dim_data(dim);
	IChain out = chain;
	auto accumulate = [&](int idx, int coefficient) {
		if (coefficient == 0) return;
		int& slot = out[idx];
		slot += coefficient;
		if (slot == 0) out.erase(idx);
	};
	// d(W x): lift redundant terms and take boundaries of the lifts.
	for (auto [idx, coefficient] : chain) {
		if (here.status[idx] != CellStatus::redundant) continue;
		int lifted = here.partner_up[idx];
		int lift_coefficient = coefficient * here.lift_sign[idx];
		for (auto [face, sign] : complex_.faces(dim + 1, lifted))
			accumulate(face, sign * lift_coefficient);
	}
	// W(d x): lift the redundant part of the boundary.
	if (dim > 0) {
		const DimData& below = dim_data(dim - 1);
		for (auto [idx, coefficient] : boundary_indexed(dim, chain)) {
			if (below.status[idx] != CellStatus::redundant) continue;
			accumulate(below.partner_up[idx], coefficient * below.lift_sign[idx]);
		}
	}
	return out;
}

Chain MorseComplex::flow(const Chain& chain) const {
	IChain indexed;
	for (const auto& [cell, coefficient] : chain.terms) {
		int idx = complex_.index_of(cell, chain.dim);
		if (idx < 0) fail(ErrorCode::invalid_argument, "chain term is not a cell of the complex");
		indexed[idx] = coefficient;
	}
	IChain flowed = flow_indexed(chain.dim, indexed);
	Chain out;
	out.dim = chain.dim;
	for (auto [idx, coefficient] : flowed) out.terms.emplace(complex_.cells(chain.dim)[idx], coefficient);
	return out;
}

Chain MorseComplex::flow_infinity(const Chain& chain) const {
	IChain current;
	for (const auto& [cell, coefficient] : chain.terms) {
		int idx = complex_.index_of(cell, chain.dim);
		if (idx < 0) fail(ErrorCode::invalid_argument, "chain term is not a cell of the complex");
		current[idx] = coefficient;
	}
	long long guard = complex_.cell_count(chain.dim) + 1;
	for (long long step = 0; step <= guard; ++step) {
		IChain next = flow_indexed(chain.dim, current);
		if (next == current) {
			Chain out;
			out.dim = chain.dim;
			for (auto [idx, coefficient] : current)
				out.terms.emplace(complex_.cells(chain.dim)[idx], coefficient);
			return out;
		}
		current = std::move(next);
	}
	fail(ErrorCode::stabilization_guard_exceeded, "flow did not stabilize within the cell count");
}

Chain MorseComplex::flow_infinity(const Cell& cell) const {
	Chain ch;
	ch.dim = cell.dim();
	ch.add(cell, 1);
	return flow_infinity(ch);
}

Chain MorseComplex::morse_boundary(const Cell& cell) const {
	int dim = cell.dim();
	int idx = complex_.index_of(cell, dim);
	if (idx < 0) fail(ErrorCode::invalid_argument, "not a cell of the complex");
	if (status(dim, idx) != CellStatus::critical)
		fail(ErrorCode::wrong_status, "the Morse boundary is defined on critical cells");
	Chain out;
	out.dim = dim - 1;
	if (dim == 0) return out;
	Chain stable = flow_infinity(cell);
	const DimData& below = dim_data(dim - 1);
	for (const auto& [face, coefficient] : boundary(tree(), stable).terms) {
		int face_idx = complex_.index_of(face, dim - 1);
		check_internal(face_idx >= 0, "boundary term must be a cell of the complex");
		if (below.status[face_idx] == CellStatus::critical) out.add(face, coefficient);
	}
	return out;
}

std::vector<int> MorseComplex::betti() const {
	std::vector<int> out(strands() + 1, 0);
	for (int dim = 0; dim <= strands(); ++dim) {
		out[dim] = static_cast<int>(critical(dim).size());
		for (int idx : critical(dim)) {
			Chain tilde = morse_boundary(complex_.cells(dim)[idx]);
			if (!tilde.is_zero())
				fail(ErrorCode::morse_boundary_nonzero,
				     "nonzero Morse boundary at " + format_cell(complex_.cells(dim)[idx]));
		}
	}
	return out;
}

std::vector<int> betti_numbers(const PlaneTree& tree, int n) {
	return MorseComplex(tree, n).betti();
}

} // namespace treebraid
