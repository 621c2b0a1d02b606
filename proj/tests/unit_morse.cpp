#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treebraid/morse.hpp"

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

Chain chain_of(const Cell& cell, int coefficient = 1) {
	Chain c;
	c.dim = cell.dim();
	c.add(cell, coefficient);
	return c;
}

} // namespace

TEST_SUITE("morse") {

TEST_CASE("blocked vertices and disrespectful edges") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell a = make_cell(t, {4, 8, 9}, {7});
	CHECK(is_blocked(t, 4, a));  // edge towards the root ends at 3, a closure point of e7
	CHECK(is_blocked(t, 8, a));  // edge [8, 7] touches e7
	CHECK(is_blocked(t, 9, a));  // edge [9, 8] touches the member 8
	CHECK(is_disrespectful(t, 7, a)); // the witness is 4, between parent 3 and 7

	Cell free = make_cell(t, {4, 10, 13, 22}, {});
	CHECK_FALSE(is_blocked(t, 4, free));
	CHECK(is_blocked(t, 0, make_cell(t, {0, 2}, {}))); // the root is always blocked

	Cell resp = make_cell(t, {10, 13, 22}, {4});
	CHECK_FALSE(is_disrespectful(t, 4, resp)); // no cell vertex between 3 and 4

	CHECK_FAILS_WITH(is_blocked(t, 5, a), ErrorCode::vertex_not_in_cell);
	CHECK_FAILS_WITH(is_disrespectful(t, 16, a), ErrorCode::edge_not_in_cell);
}

TEST_CASE("classification of the named example cells") {
	PlaneTree t = PlaneTree::canonical_t_min();
	// the twenty-four critical 1-cells include these named ones
	for (const char* text : {
	         "{v4, e7, v8, v9}",     // A
	         "{*, v1, v10, e19}",    // P1
	         "{*, v1, v22, e25}",    // P3
	         "{v10, e19, v20, v21}", // Q
	         "{v10, v11, e19, v20}", // R
	         "{v10, v11, v12, e19}", // B
	         "{*, v10, v11, e19}",   // B'
	         "{*, v1, v13, e16}",    // C
	         "{*, v13, v14, e16}",   // M
	         "{*, v13, e16, v17}",   // N
	     })
		CHECK(classify(t, parse_cell(t, text)) == CellStatus::critical);

	CHECK(classify(t, parse_cell(t, "{v4, v10, v13, v22}")) == CellStatus::redundant);
	CHECK(classify(t, parse_cell(t, "{e4, v10, v13, v22}")) == CellStatus::collapsible);
	CHECK(classify(t, parse_cell(t, "{*, v1, v2, v3}")) == CellStatus::critical); // all blocked, no edges
	CHECK(classify(t, parse_cell(t, "{*, v1, v2, v4}")) == CellStatus::redundant); // v4 can move
}

TEST_CASE("matching moves are mutually inverse") {
	PlaneTree t = PlaneTree::canonical_t_min();
	Cell red = parse_cell(t, "{v4, v10, v13, v22}");
	Cell up = match_up(t, red);
	CHECK(up == parse_cell(t, "{e4, v10, v13, v22}"));
	CHECK(classify(t, up) == CellStatus::collapsible);
	CHECK(match_down(t, up) == red);

	CHECK_FAILS_WITH(match_up(t, up), ErrorCode::wrong_status);
	CHECK_FAILS_WITH(match_down(t, red), ErrorCode::wrong_status);
	Cell crit = parse_cell(t, "{v4, e7, v8, v9}");
	CHECK_FAILS_WITH(match_up(t, crit), ErrorCode::wrong_status);
	CHECK_FAILS_WITH(match_down(t, crit), ErrorCode::wrong_status);

	// exhaustively over a small instance
	Complex complex(t, 2);
	for (int dim = 0; dim < 2; ++dim)
		for (const Cell& c : complex.cells(dim))
			if (classify(t, c) == CellStatus::redundant) {
				Cell partner = match_up(t, c);
				CHECK(classify(t, partner) == CellStatus::collapsible);
				CHECK(match_down(t, partner) == c);
			}
}

TEST_CASE("matching pairs up redundant and collapsible cells") {
	PlaneTree t = PlaneTree::canonical_t_min();
	for (int n : {2, 3}) {
		MorseComplex morse(t, n);
		for (int dim = 0; dim < n; ++dim) {
			long long redundant = 0, collapsible_above = 0;
			for (int i = 0; i < morse.complex().cell_count(dim); ++i)
				redundant += morse.status(dim, i) == CellStatus::redundant;
			for (int i = 0; i < morse.complex().cell_count(dim + 1); ++i)
				collapsible_above += morse.status(dim + 1, i) == CellStatus::collapsible;
			CHECK(redundant == collapsible_above);
		}
		// dimension n has no redundant cells, dimension 0 no collapsible ones
		for (int i = 0; i < morse.complex().cell_count(n); ++i)
			CHECK(morse.status(n, i) != CellStatus::redundant);
		for (int i = 0; i < morse.complex().cell_count(0); ++i)
			CHECK(morse.status(0, i) != CellStatus::collapsible);
	}
}

TEST_CASE("betti numbers of the example spaces") {
	PlaneTree t = PlaneTree::canonical_t_min();
	CHECK(betti_numbers(t, 2) == std::vector<int>{1, 4, 0});
	CHECK(betti_numbers(t, 3) == std::vector<int>{1, 12, 0, 0});
	CHECK(betti_numbers(t, 4) == std::vector<int>{1, 24, 6, 0, 0});

	CHECK(betti_numbers(y_tree(3), 4) == std::vector<int>{1, 6, 0, 0, 0});
	CHECK(betti_numbers(y_tree(1).subdivide_for(2), 2) == std::vector<int>{1, 1, 0});

	CHECK(betti_numbers(PlaneTree::path_tree(5), 4) == std::vector<int>{1, 0, 0, 0, 0});
	CHECK(betti_numbers(PlaneTree::path_tree(4), 3) == std::vector<int>{1, 0, 0, 0});
	CHECK(betti_numbers(PlaneTree::path_tree(2), 2) == std::vector<int>{1, 0, 0});
}

TEST_CASE("critical cell lists") {
	PlaneTree t = PlaneTree::canonical_t_min();
	MorseComplex morse(t, 4);
	CHECK(morse.critical_cells(0).size() == 1);
	CHECK(morse.critical_cells(0)[0] == parse_cell(t, "{*, v1, v2, v3}"));
	CHECK(morse.critical_cells(1).size() == 24);
	CHECK(morse.critical_cells(2).size() == 6);
	CHECK(morse.critical_cells(3).empty());
	CHECK(morse.critical_cells(4).empty());
	for (const Cell& c : morse.critical_cells(2))
		CHECK(classify(t, c) == CellStatus::critical);
}

TEST_CASE("flow commutes with the boundary and stabilizes") {
	PlaneTree t = PlaneTree::canonical_t_min();
	MorseComplex morse(t, 3);
	const Complex& complex = morse.complex();
	std::mt19937 rng(11);
	for (int trial = 0; trial < 25; ++trial) {
		int dim = 1 + static_cast<int>(rng() % 3);
		Chain chain;
		chain.dim = dim;
		for (int pick = 0; pick < 3; ++pick) {
			const auto& cells = complex.cells(dim);
			if (cells.empty())
				continue;
			chain.add(cells[rng() % cells.size()], 1 + static_cast<int>(rng() % 3));
		}
		Chain fd = morse.flow(boundary(t, chain));
		Chain df = boundary(t, morse.flow(chain));
		CHECK(fd == df);

		Chain stable = morse.flow_infinity(chain);
		CHECK(morse.flow(stable) == stable); // a fixed point, hence idempotent
	}
}

TEST_CASE("flow kills collapsible cells and fixes critical coefficients") {
	PlaneTree t = PlaneTree::canonical_t_min();
	MorseComplex morse(t, 3);
	const Complex& complex = morse.complex();
	for (int dim = 1; dim <= 3; ++dim) {
		int seen = 0;
		for (int i = 0; i < complex.cell_count(dim) && seen < 30; ++i) {
			if (morse.status(dim, i) != CellStatus::collapsible)
				continue;
			++seen;
			CHECK(morse.flow_infinity(complex.cells(dim)[i]).is_zero());
		}
	}
	// the stable flow of a critical cell holds it with coefficient 1 and
	// carries no other critical cell
	MorseComplex morse4(t, 4);
	for (const Cell& c : morse4.critical_cells(1)) {
		Chain stable = morse4.flow_infinity(c);
		CHECK(stable.terms.at(c) == 1);
		for (const auto& [term, coefficient] : stable.terms) {
			int idx = morse4.complex().index_of(term, 1);
			if (term != c)
				CHECK(morse4.status(1, idx) != CellStatus::critical);
		}
	}
}

TEST_CASE("morse boundary vanishes on critical cells") {
	PlaneTree t = PlaneTree::canonical_t_min();
	for (int n : {2, 3, 4}) {
		MorseComplex morse(t, n);
		for (int dim = 0; dim <= n; ++dim)
			for (const Cell& c : morse.critical_cells(dim))
				CHECK(morse.morse_boundary(c).is_zero());
	}
	PlaneTree t5 = PlaneTree::canonical_t_min().subdivide_for(5);
	MorseComplex morse(t5, 5);
	for (const Cell& c : morse.critical_cells(2))
		CHECK(morse.morse_boundary(c).is_zero());
	CHECK_FAILS_WITH(morse.morse_boundary(parse_cell(t5, "{v1, v2, v4, v5, v7}")),
	                 ErrorCode::wrong_status);
}

TEST_CASE("flow guards") {
	PlaneTree t = PlaneTree::canonical_t_min();
	MorseComplex morse(t, 2);
	Chain fine;
	fine.dim = 1;
	fine.add(make_cell(t, {1}, {4}), 1);
	CHECK_NOTHROW(morse.flow_infinity(fine));

	Chain alien;
	alien.dim = 1;
	Cell c;
	c.vertices = {0, 5};
	c.edges = {2}; // three members; no 1-cell of a 2-strand space
	alien.add(c, 1);
	CHECK_FAILS_WITH(morse.flow(alien), ErrorCode::invalid_argument);
}

} // TEST_SUITE
