#include "treebraid/cells.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace treebraid {

std::vector<int> Cell::codes() const {
	std::vector<int> out;
	out.reserve(vertices.size() + edges.size());
	for (int v : vertices) out.push_back(2 * v);
	for (int e : edges) out.push_back(2 * e + 1);
	std::sort(out.begin(), out.end());
	return out;
}

bool Cell::has_vertex(int v) const {
	return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Cell::has_edge(int e) const {
	return std::binary_search(edges.begin(), edges.end(), e);
}

bool Cell::operator<(const Cell& other) const {
	std::vector<int> a = codes(), b = other.codes();
	return a < b;
}

size_t CellHash::operator()(const Cell& c) const {
	// FNV-1a over the member codes.
	uint64_t h = 1469598103934665603ull;
	auto mix = [&](uint64_t x) {
		h ^= x;
		h *= 1099511628211ull;
	};
	for (int v : c.vertices) mix(static_cast<uint64_t>(2 * v));
	for (int e : c.edges) mix(static_cast<uint64_t>(2 * e + 1));
	return static_cast<size_t>(h);
}

void validate_cell(const PlaneTree& tree, const Cell& cell) {
	int n_vertices = tree.vertex_count();
	for (size_t i = 0; i < cell.vertices.size(); ++i) {
		int v = cell.vertices[i];
		if (v < 0 || v >= n_vertices) fail(ErrorCode::invalid_argument, "vertex out of range");
		if (i > 0 && cell.vertices[i - 1] >= v)
			fail(ErrorCode::invalid_argument, "cell vertices must be strictly ascending");
	}
	for (size_t i = 0; i < cell.edges.size(); ++i) {
		int e = cell.edges[i];
		if (e < 1 || e >= n_vertices) fail(ErrorCode::invalid_argument, "edge out of range");
		if (i > 0 && cell.edges[i - 1] >= e)
			fail(ErrorCode::invalid_argument, "cell edges must be strictly ascending");
	}
	// Closure disjointness: no vertex member may be an endpoint of an edge
	// member, and no two edge members may share an endpoint.
	for (int e : cell.edges) {
		auto [child, par] = tree.edge_endpoints(e);
		if (cell.has_vertex(child) || cell.has_vertex(par))
			fail(ErrorCode::invalid_argument, "vertex member touches edge member " + std::to_string(e));
	}
	for (size_t i = 0; i < cell.edges.size(); ++i)
		for (size_t j = i + 1; j < cell.edges.size(); ++j) {
			auto [c1, p1] = tree.edge_endpoints(cell.edges[i]);
			auto [c2, p2] = tree.edge_endpoints(cell.edges[j]);
			if (c1 == c2 || c1 == p2 || p1 == c2 || p1 == p2)
				fail(ErrorCode::invalid_argument, "edge members share an endpoint");
		}
}

Cell make_cell(const PlaneTree& tree, std::vector<int> vertices, std::vector<int> edges) {
	std::sort(vertices.begin(), vertices.end());
	std::sort(edges.begin(), edges.end());
	Cell cell{std::move(vertices), std::move(edges)};
	validate_cell(tree, cell);
	return cell;
}

std::string format_cell(const Cell& cell) {
	std::string out = "{";
	auto vi = cell.vertices.begin();
	auto ei = cell.edges.begin();
	bool first = true;
	while (vi != cell.vertices.end() || ei != cell.edges.end()) {
		if (!first) out += ", ";
		first = false;
		bool take_vertex = ei == cell.edges.end() ||
		                   (vi != cell.vertices.end() && *vi <= *ei);
		if (take_vertex) {
			out += (*vi == 0) ? "*" : "v" + std::to_string(*vi);
			++vi;
		} else {
			out += "e" + std::to_string(*ei);
			++ei;
		}
	}
	out += "}";
	return out;
}

Cell parse_cell(const PlaneTree& tree, std::string_view text) {
	size_t pos = 0;
	auto skip_ws = [&] {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
	};
	auto expect = [&](char c) {
		skip_ws();
		if (pos >= text.size() || text[pos] != c)
			fail(ErrorCode::parse_error, "expected '" + std::string(1, c) + "' in cell text");
		++pos;
	};
	auto parse_number = [&]() -> int {
		skip_ws();
		size_t start = pos;
		while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
		if (start == pos) fail(ErrorCode::parse_error, "expected digits in cell text");
		int value = 0;
		std::from_chars(text.data() + start, text.data() + pos, value);
		return value;
	};

	std::vector<int> vertices, edges;
	expect('{');
	skip_ws();
	if (pos >= text.size() || text[pos] != '}') {
		while (true) {
			skip_ws();
			if (pos >= text.size()) fail(ErrorCode::parse_error, "unterminated cell text");
			char c = text[pos];
			if (c == '*') {
				++pos;
				vertices.push_back(0);
			} else if (c == 'v') {
				++pos;
				vertices.push_back(parse_number());
			} else if (c == 'e') {
				++pos;
				edges.push_back(parse_number());
			} else {
				fail(ErrorCode::parse_error, std::string("unexpected character '") + c + "' in cell text");
			}
			skip_ws();
			if (pos < text.size() && text[pos] == ',') {
				++pos;
				continue;
			}
			break;
		}
	}
	expect('}');
	skip_ws();
	if (pos != text.size()) fail(ErrorCode::parse_error, "trailing characters after cell text");
	return make_cell(tree, std::move(vertices), std::move(edges));
}

Cell break_edges(const PlaneTree& tree, const Cell& cell, const std::vector<int>& edge_subset,
                 const std::vector<EdgeEnd>& ends) {
	if (edge_subset.size() != ends.size())
		fail(ErrorCode::invalid_argument, "one endpoint choice per broken edge required");
	Cell out = cell;
	for (size_t i = 0; i < edge_subset.size(); ++i) {
		int e = edge_subset[i];
		if (!out.has_edge(e))
			fail(ErrorCode::not_an_edge_of_cell, "edge " + std::to_string(e) + " is not in the cell");
		out.edges.erase(std::find(out.edges.begin(), out.edges.end(), e));
		auto [child, par] = tree.edge_endpoints(e);
		out.vertices.push_back(ends[i] == EdgeEnd::child ? child : par);
	}
	std::sort(out.vertices.begin(), out.vertices.end());
	validate_cell(tree, out);
	return out;
}

std::vector<std::pair<Cell, int>> faces_with_sign(const PlaneTree& tree, const Cell& cell) {
	if (cell.dim() == 0) fail(ErrorCode::zero_dimensional, "a 0-cell has no faces");
	std::vector<std::pair<Cell, int>> out;
	out.reserve(2 * cell.edges.size());
	for (size_t i = 0; i < cell.edges.size(); ++i) {
		int e = cell.edges[i];
		int k = static_cast<int>(i) + 1;
		int child_sign = (k % 2 == 0) ? 1 : -1;
		auto [child, par] = tree.edge_endpoints(e);
		for (auto [endpoint, sign] : {std::pair{child, child_sign}, std::pair{par, -child_sign}}) {
			Cell face;
			face.edges.reserve(cell.edges.size() - 1);
			for (int other : cell.edges)
				if (other != e) face.edges.push_back(other);
			face.vertices = cell.vertices;
			face.vertices.insert(
			    std::upper_bound(face.vertices.begin(), face.vertices.end(), endpoint), endpoint);
			out.emplace_back(std::move(face), sign);
		}
	}
	return out;
}

void Chain::add(const Cell& cell, int coefficient) {
	if (coefficient == 0) return;
	auto [it, inserted] = terms.emplace(cell, coefficient);
	if (!inserted) {
		it->second += coefficient;
		if (it->second == 0) terms.erase(it);
	}
}

Chain boundary(const PlaneTree& tree, const Chain& chain) {
	Chain out;
	out.dim = chain.dim - 1;
	for (const auto& [cell, coefficient] : chain.terms)
		for (auto& [face, sign] : faces_with_sign(tree, cell)) out.add(face, sign * coefficient);
	return out;
}

Chain boundary(const PlaneTree& tree, const Cell& cell) {
	Chain ch;
	ch.dim = cell.dim();
	ch.add(cell, 1);
	return boundary(tree, ch);
}

int Cochain::pair_mod2(const Chain& chain) const {
	int total = 0;
	for (const auto& [cell, coefficient] : chain.terms)
		if (support.count(cell)) total ^= (coefficient & 1);
	return total;
}

void Cochain::toggle(const Cell& cell) {
	auto it = support.find(cell);
	if (it == support.end())
		support.insert(cell);
	else
		support.erase(it);
}

Cochain add_mod2(const Cochain& a, const Cochain& b) {
	if (a.dim != b.dim) fail(ErrorCode::dimension_mismatch, "cochain dimensions differ");
	Cochain out;
	out.dim = a.dim;
	out.support = a.support;
	for (const Cell& cell : b.support) out.toggle(cell);
	return out;
}

} // namespace treebraid
