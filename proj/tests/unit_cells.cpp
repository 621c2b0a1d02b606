#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "treebraid/complex.hpp"

using namespace treebraid;
using namespace treebraid::testing;

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

TEST_SUITE("cells") {

TEST_CASE("member codes and ordering") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell c = make_cell(t, {4, 8, 9}, {7});
	CHECK(c.dim() == 1);
	CHECK(c.size() == 4);
	CHECK(c.codes() == std::vector<int>{8, 15, 16, 18});
	CHECK(c.has_vertex(4));
	CHECK_FALSE(c.has_vertex(7));
	CHECK(c.has_edge(7));
	CHECK_FALSE(c.has_edge(4));

	Cell d = make_cell(t, {9, 4, 8}, {7}); // members may arrive unsorted
	CHECK(d == c);
}

TEST_CASE("validation rejects touching closures") {
	PlaneTree t = PlaneTree::canonical_t_min();
	// vertex on an edge endpoint
	CHECK_FAILS_WITH(make_cell(t, {7}, {7}), ErrorCode::invalid_argument);
	CHECK_FAILS_WITH(make_cell(t, {3}, {7}), ErrorCode::invalid_argument);
	// edges sharing the endpoint 3 = parent(4) = parent(7)
	CHECK_FAILS_WITH(make_cell(t, {}, {4, 7}), ErrorCode::invalid_argument);
	// duplicate members
	CHECK_FAILS_WITH(make_cell(t, {5, 5}, {}), ErrorCode::invalid_argument);
	// out of range
	CHECK_FAILS_WITH(make_cell(t, {28}, {}), ErrorCode::invalid_argument);
	CHECK_FAILS_WITH(make_cell(t, {}, {0}), ErrorCode::invalid_argument);
	// disjoint closures pass
	CHECK_NOTHROW(validate_cell(t, make_cell(t, {2, 5}, {8})));
}

TEST_CASE("cell text round trip") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell c = make_cell(t, {0, 10, 13}, {16});
	CHECK(format_cell(c) == "{*, v10, v13, e16}");
	CHECK(parse_cell(t, "{*, v10, v13, e16}") == c);
	CHECK(parse_cell(t, "{e16,v13,v10,v0}") == c); // any order, v0 for *
	CHECK(parse_cell(t, "  { * , e16 , v13 , v10 }  ") == c);

	CHECK_FAILS_WITH(parse_cell(t, "{v1, v2"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_cell(t, "v1, v2}"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_cell(t, "{v1, x2}"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_cell(t, "{v1,, v2}"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_cell(t, "{v1, v2} junk"), ErrorCode::parse_error);
	CHECK_FAILS_WITH(parse_cell(t, "{v1, e1}"), ErrorCode::invalid_argument);
}

TEST_CASE("breaking edges") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell c = make_cell(t, {13}, {16, 19});
	Cell child_end = break_edges(t, c, {16}, {EdgeEnd::child});
	CHECK(child_end == make_cell(t, {13, 16}, {19}));
	Cell parent_end = break_edges(t, c, {16}, {EdgeEnd::parent});
	CHECK(parent_end == make_cell(t, {12, 13}, {19}));
	Cell both = break_edges(t, c, {16, 19}, {EdgeEnd::parent, EdgeEnd::child});
	CHECK(both == make_cell(t, {12, 13, 19}, {}));
	CHECK_FAILS_WITH(break_edges(t, c, {7}, {EdgeEnd::child}), ErrorCode::not_an_edge_of_cell);
	CHECK_FAILS_WITH(break_edges(t, c, {16}, {}), ErrorCode::invalid_argument);
}

TEST_CASE("faces and incidence signs") {
	PlaneTree t = PlaneTree::canonical_t_min();
	// one edge: boundary = parent face - child face
	Cell one = make_cell(t, {13}, {16});
	auto faces = faces_with_sign(t, one);
	REQUIRE(faces.size() == 2);
	std::map<Cell, int> signs(faces.begin(), faces.end());
	CHECK(signs[make_cell(t, {13, 16}, {})] == -1);
	CHECK(signs[make_cell(t, {12, 13}, {})] == 1);

	// two edges: the sign of the second edge's faces flips relative to one
	Cell two = make_cell(t, {13}, {16, 19});
	auto faces2 = faces_with_sign(t, two);
	REQUIRE(faces2.size() == 4);
	std::map<Cell, int> signs2(faces2.begin(), faces2.end());
	CHECK(signs2[make_cell(t, {13, 16}, {19})] == -1);
	CHECK(signs2[make_cell(t, {12, 13}, {19})] == 1);
	CHECK(signs2[make_cell(t, {13, 19}, {16})] == 1);
	CHECK(signs2[make_cell(t, {9, 13}, {16})] == -1);

	CHECK_FAILS_WITH(faces_with_sign(t, make_cell(t, {1, 5}, {})), ErrorCode::zero_dimensional);
}

TEST_CASE("boundary squares to zero") {
	PlaneTree y = y_tree(2).subdivide_for(3);
	for (const Cell& c : enumerate_cells(y, 3, 2)) {
		Chain dd = boundary(y, boundary(y, c));
		CHECK(dd.is_zero());
	}
	PlaneTree t = PlaneTree::canonical_t_min();
	for (const Cell& c : enumerate_cells(t, 3, 3)) {
		Chain dd = boundary(t, boundary(t, c));
		CHECK(dd.is_zero());
	}
}

TEST_CASE("chains and cochains") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell a = make_cell(t, {13}, {16});
	Cell b = make_cell(t, {14}, {16});
	Chain chain;
	chain.dim = 1;
	chain.add(a, 1);
	chain.add(b, 2);
	chain.add(a, -1); // cancels
	CHECK(chain.terms.size() == 1);
	CHECK(chain.terms.at(b) == 2);

	Cochain alpha;
	alpha.dim = 1;
	alpha.toggle(a);
	alpha.toggle(b);
	alpha.toggle(a);
	CHECK(alpha.support == std::set<Cell>{b});
	CHECK(alpha.pair_mod2(chain) == 0); // 2 * 1 mod 2
	chain.add(b, 1);
	CHECK(alpha.pair_mod2(chain) == 1);

	Cochain beta;
	beta.dim = 1;
	beta.toggle(a);
	beta.toggle(b);
	CHECK(add_mod2(alpha, beta).support == std::set<Cell>{a});
	Cochain gamma;
	gamma.dim = 2;
	CHECK_FAILS_WITH(add_mod2(alpha, gamma), ErrorCode::dimension_mismatch);
}

TEST_CASE("enumeration counts match the brute-force filter") {
	PlaneTree y = y_tree(1).subdivide_for(3);
	for (int n = 1; n <= 3; ++n)
		for (int dim = 0; dim <= n; ++dim) {
			if (!y.is_sufficiently_subdivided(n))
				continue;
			auto mine = enumerate_cells(y, n, dim);
			auto raw = naive_cells(y, n, dim);
			CHECK(mine.size() == raw.size());
			CHECK(count_cells(y, n, dim) == static_cast<long long>(raw.size()));
			std::sort(raw.begin(), raw.end());
			CHECK(std::is_sorted(mine.begin(), mine.end()));
			CHECK(mine == raw);
		}

	PlaneTree h = h_tree(1, 1).subdivide_for(2);
	for (int dim = 0; dim <= 2; ++dim)
		CHECK(count_cells(h, 2, dim) == naive_cell_count(h, 2, dim));
}

TEST_CASE("cell counts of the example space") {
	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(count_cells(t, 4, 0) == 20475); // C(28, 4)
	CHECK(count_cells(t, 4, 1) == 70200);
	CHECK(count_cells(t, 4, 2) == 88596);
	CHECK(count_cells(t, 2, 0) == 378);
	CHECK(count_cells(t, 2, 1) == naive_cell_count(t, 2, 1));
	CHECK(count_cells(t, 3, 2) == naive_cell_count(t, 3, 2));
	CHECK_FAILS_WITH(count_cells(t, 5, 0), ErrorCode::not_sufficiently_subdivided);
	CHECK_FAILS_WITH(count_cells(t, 4, 5), ErrorCode::invalid_argument);
	CHECK_FAILS_WITH(count_cells(t, 0, 0), ErrorCode::invalid_argument);
}

TEST_CASE("complex accessors agree with the enumeration") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Complex complex(t, 2);
	for (int dim = 0; dim <= 2; ++dim) {
		CHECK(complex.cell_count(dim) == count_cells(t, 2, dim));
		CHECK(complex.cells(dim).size() == static_cast<size_t>(complex.cell_count(dim)));
	}
	const auto& ones = complex.cells(1);
	for (int i = 0; i < static_cast<int>(ones.size()); i += 37) {
		CHECK(complex.index_of(ones[i], 1) == i);
		auto reference = faces_with_sign(t, ones[i]);
		const auto& table = complex.faces(1, i);
		REQUIRE(table.size() == reference.size());
		for (size_t k = 0; k < table.size(); ++k) {
			CHECK(complex.cells(0)[table[k].first] == reference[k].first);
			CHECK(table[k].second == reference[k].second);
		}
	}
	CHECK(complex.index_of(make_cell(t, {1, 4}, {}), 0) >= 0);
	CHECK(complex.index_of(make_cell(t, {13}, {16}), 1) >= 0);
}

TEST_CASE("coboundary is adjoint to the boundary") {
	PlaneTree y = y_tree(2);
	Complex complex(y, 2);
	std::mt19937 rng(7);
	const auto& ones = complex.cells(1);
	const auto& twos = complex.cells(2);
	REQUIRE(!twos.empty());
	for (int trial = 0; trial < 40; ++trial) {
		Cochain alpha;
		alpha.dim = 1;
		for (const Cell& c : ones)
			if (rng() % 2)
				alpha.toggle(c);
		Cochain delta = coboundary(complex, alpha);
		const Cell& c = twos[rng() % twos.size()];
		int lhs = delta.contains(c) ? 1 : 0;
		Chain dc = boundary(y, c);
		CHECK(lhs == alpha.pair_mod2(dc));
	}
}

} // TEST_SUITE
