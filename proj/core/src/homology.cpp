#include "treebraid/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace treebraid {

namespace {

long long checked_add(long long a, long long b) {
	long long out;
	if (__builtin_add_overflow(a, b, &out))
		fail(ErrorCode::resource_bound, "integer overflow during exact reduction");
	return out;
}

long long checked_mul(long long a, long long b) {
	long long out;
	if (__builtin_mul_overflow(a, b, &out))
		fail(ErrorCode::resource_bound, "integer overflow during exact reduction");
	return out;
}

// column += scale * other, keeping rows ascending and dropping zeros.
IntColumn column_axpy(const IntColumn& column, long long scale, const IntColumn& other) {
	IntColumn out;
	out.reserve(column.size() + other.size());
	size_t i = 0, j = 0;
	while (i < column.size() || j < other.size()) {
		if (j == other.size() || (i < column.size() && column[i].first < other[j].first)) {
			out.push_back(column[i++]);
		} else if (i == column.size() || other[j].first < column[i].first) {
			out.emplace_back(other[j].first, checked_mul(scale, other[j].second));
			++j;
		} else {
			long long value = checked_add(column[i].second, checked_mul(scale, other[j].second));
			if (value != 0) out.emplace_back(column[i].first, value);
			++i;
			++j;
		}
	}
	return out;
}

// Extended gcd: returns g and x, y with x*a + y*b = g, g > 0.
long long extended_gcd(long long a, long long b, long long& x, long long& y) {
	if (b == 0) {
		x = a < 0 ? -1 : 1;
		y = 0;
		return a < 0 ? -a : a;
	}
	long long x1, y1;
	long long g = extended_gcd(b, a % b, x1, y1);
	x = y1;
	y = x1 - (a / b) * y1;
	return g;
}

// Dense Smith normal form; returns the nonzero diagonal, divisibility-ordered.
std::vector<long long> dense_smith(std::vector<std::vector<long long>> m) {
	std::vector<long long> diagonal;
	size_t rows = m.size();
	size_t cols = rows ? m[0].size() : 0;
	size_t at = 0;
	while (at < rows && at < cols) {
		// Find the entry of smallest absolute value in the remaining block.
		size_t pr = rows, pc = cols;
		long long best = 0;
		for (size_t r = at; r < rows; ++r)
			for (size_t c = at; c < cols; ++c)
				if (m[r][c] != 0 && (best == 0 || std::llabs(m[r][c]) < best)) {
					best = std::llabs(m[r][c]);
					pr = r;
					pc = c;
				}
		if (pr == rows) break;
		std::swap(m[at], m[pr]);
		for (size_t r = at; r < rows; ++r) std::swap(m[r][at], m[r][pc]);
		bool clean = true;
		for (size_t r = at + 1; r < rows; ++r)
			if (m[r][at] % m[at][at] != 0) clean = false;
		for (size_t c = at + 1; c < cols; ++c)
			if (m[at][c] % m[at][at] != 0) clean = false;
		if (!clean) {
			// Reduce the worst offender and retry with a smaller pivot.
			for (size_t r = at + 1; r < rows; ++r) {
				long long q = m[r][at] / m[at][at];
				if (q != 0)
					for (size_t c = at; c < cols; ++c)
						m[r][c] = checked_add(m[r][c], checked_mul(-q, m[at][c]));
			}
			for (size_t c = at + 1; c < cols; ++c) {
				long long q = m[at][c] / m[at][at];
				if (q != 0)
					for (size_t r = at; r < rows; ++r)
						m[r][c] = checked_add(m[r][c], checked_mul(-q, m[r][at]));
			}
			continue;
		}
		for (size_t r = at + 1; r < rows; ++r) {
			long long q = m[r][at] / m[at][at];
			if (q != 0)
				for (size_t c = at; c < cols; ++c)
					m[r][c] = checked_add(m[r][c], checked_mul(-q, m[at][c]));
		}
		for (size_t c = at + 1; c < cols; ++c) m[at][c] = 0;
		diagonal.push_back(std::llabs(m[at][at]));
		++at;
	}
	// Normalize into a divisibility chain.
	for (size_t i = 0; i < diagonal.size(); ++i)
		for (size_t j = i + 1; j < diagonal.size(); ++j)
			if (diagonal[j] % diagonal[i] != 0) {
				long long g = std::gcd(diagonal[i], diagonal[j]);
				diagonal[j] = checked_mul(diagonal[i] / g, diagonal[j]);
				diagonal[i] = g;
			}
	return diagonal;
}

} // namespace

long long gf2_rank(std::vector<std::vector<int>> columns) {
	std::unordered_map<int, int> claimant;
	long long rank = 0;
	for (size_t c = 0; c < columns.size(); ++c) {
		std::vector<int>& column = columns[c];
		while (!column.empty()) {
			auto it = claimant.find(column.back());
			if (it == claimant.end()) {
				claimant.emplace(column.back(), static_cast<int>(c));
				++rank;
				break;
			}
			// Symmetric difference with the claimant column kills the low.
			const std::vector<int>& other = columns[it->second];
			std::vector<int> merged;
			merged.reserve(column.size() + other.size());
			std::set_symmetric_difference(column.begin(), column.end(), other.begin(),
			                              other.end(), std::back_inserter(merged));
			column = std::move(merged);
		}
	}
	return rank;
}

std::vector<long long> smith_diagonal(std::vector<IntColumn> columns) {
	// Phase 1: integer column echelon.  Each column's low row is claimed by
	// at most one column; collisions are resolved by a unimodular gcd step
	// on the pair, which strictly shrinks the contested low value.
	std::unordered_map<int, int> claimant;
	for (size_t c = 0; c < columns.size(); ++c) {
		for (;;) {
			if (columns[c].empty()) break;
			int low = columns[c].back().first;
			auto it = claimant.find(low);
			if (it == claimant.end()) {
				claimant.emplace(low, static_cast<int>(c));
				break;
			}
			IntColumn& other = columns[it->second];
			long long a = other.back().second;
			long long b = columns[c].back().second;
			if (b % a == 0) {
				columns[c] = column_axpy(columns[c], -(b / a), other);
			} else {
				// Unimodular pair step: (other, col) <- (x*other + y*col,
				// (a/g)*col - (b/g)*other) leaves gcd(a,b) at the contested
				// low of `other` and clears it in `col`.
				long long x, y;
				long long g = extended_gcd(a, b, x, y);
				IntColumn scaled_other = other;
				for (auto& entry : scaled_other) entry.second = checked_mul(entry.second, x);
				IntColumn new_other = column_axpy(scaled_other, y, columns[c]);
				IntColumn scaled_col = columns[c];
				for (auto& entry : scaled_col) entry.second = checked_mul(entry.second, a / g);
				IntColumn new_col = column_axpy(scaled_col, -(b / g), other);
				other = std::move(new_other);
				columns[c] = std::move(new_col);
				check_internal(!other.empty() && other.back().first == low &&
				                   std::llabs(other.back().second) == g,
				               "gcd step must leave g at the contested low");
				check_internal(columns[c].empty() || columns[c].back().first < low,
				               "gcd step must clear the contested low");
			}
		}
	}

	// Phase 2: peel off unit pivots.  A unit low can clear its row with
	// column operations (which preserve all lows) and then its column with
	// row operations confined to that column.
	std::vector<int> order; // claimed columns by ascending low row
	for (auto [row, col] : claimant) order.push_back(col);
	std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
		return columns[lhs].back().first < columns[rhs].back().first;
	});
	long long units = 0;
	std::vector<int> residual;
	for (int col : order) {
		long long low_value = columns[col].back().second;
		if (low_value == 1 || low_value == -1) {
			int low_row = columns[col].back().first;
			for (int other : order) {
				if (other == col || columns[other].empty()) continue;
				auto hit = std::lower_bound(columns[other].begin(), columns[other].end(),
				                            std::pair<int, long long>{low_row, INT64_MIN});
				if (hit != columns[other].end() && hit->first == low_row)
					columns[other] =
					    column_axpy(columns[other], -hit->second / low_value, columns[col]);
			}
			++units;
			columns[col].clear();
		} else {
			residual.push_back(col);
		}
	}

	std::vector<long long> diagonal(units, 1);
	if (!residual.empty()) {
		// Dense Smith form on the residual block.
		std::vector<int> live_rows;
		for (int col : residual)
			for (auto [row, value] : columns[col]) live_rows.push_back(row);
		std::sort(live_rows.begin(), live_rows.end());
		live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
		if (live_rows.size() > 2000 || residual.size() > 2000)
			fail(ErrorCode::resource_bound, "residual exact reduction exceeds desk scale");
		std::unordered_map<int, int> row_index;
		for (size_t i = 0; i < live_rows.size(); ++i) row_index[live_rows[i]] = static_cast<int>(i);
		std::vector<std::vector<long long>> dense(live_rows.size(),
		                                          std::vector<long long>(residual.size(), 0));
		for (size_t c = 0; c < residual.size(); ++c)
			for (auto [row, value] : columns[residual[c]]) dense[row_index[row]][c] = value;
		for (long long d : dense_smith(dense)) diagonal.push_back(d);
		std::sort(diagonal.begin(), diagonal.end());
		for (size_t i = 0; i < diagonal.size(); ++i)
			for (size_t j = i + 1; j < diagonal.size(); ++j)
				if (diagonal[j] % diagonal[i] != 0) {
					long long g = std::gcd(diagonal[i], diagonal[j]);
					diagonal[j] = checked_mul(diagonal[i] / g, diagonal[j]);
					diagonal[i] = g;
				}
	}
	return diagonal;
}

HomologyReport oracle_homology(const PlaneTree& tree, int n, const HomologyOptions& options) {
	Complex complex(tree, n);
	HomologyReport report;
	report.strands = n;
	report.cell_counts.resize(n + 1);
	for (int dim = 0; dim <= n; ++dim) {
		report.cell_counts[dim] = count_cells(tree, n, dim);
		if (report.cell_counts[dim] > options.max_cells_per_dim)
			fail(ErrorCode::resource_bound, "cell count exceeds the configured bound");
	}

	report.boundary_ranks.assign(n + 2, 0);
	for (int dim = 1; dim <= n; ++dim) {
		long long count = report.cell_counts[dim];
		std::vector<std::vector<int>> columns(count);
		for (long long idx = 0; idx < count; ++idx) {
			std::vector<int> rows;
			for (auto [face, sign] : complex.faces(dim, static_cast<int>(idx)))
				rows.push_back(face);
			std::sort(rows.begin(), rows.end());
			columns[idx] = std::move(rows);
		}
		report.boundary_ranks[dim] = gf2_rank(std::move(columns));
	}

	report.betti_mod2.resize(n + 1);
	for (int dim = 0; dim <= n; ++dim)
		report.betti_mod2[dim] =
		    report.cell_counts[dim] - report.boundary_ranks[dim] - report.boundary_ranks[dim + 1];

	if (options.smith) {
		report.smith_computed = true;
		std::vector<long long> integer_ranks(n + 2, 0);
		for (int dim = 1; dim <= n; ++dim) {
			std::vector<IntColumn> columns(report.cell_counts[dim]);
			for (long long idx = 0; idx < report.cell_counts[dim]; ++idx) {
				IntColumn entries;
				for (auto [face, sign] : complex.faces(dim, static_cast<int>(idx)))
					entries.emplace_back(face, sign);
				std::sort(entries.begin(), entries.end());
				columns[idx] = std::move(entries);
			}
			std::vector<long long> diagonal = smith_diagonal(std::move(columns));
			SmithSummary summary;
			summary.boundary_dim = dim;
			summary.rank = static_cast<long long>(diagonal.size());
			for (long long d : diagonal)
				if (d != 1) summary.nonunit_divisors.push_back(d);
			if (!summary.nonunit_divisors.empty()) report.torsion_free = false;
			integer_ranks[dim] = summary.rank;
			report.smith.push_back(std::move(summary));
		}
		report.betti_integer.resize(n + 1);
		for (int dim = 0; dim <= n; ++dim)
			report.betti_integer[dim] =
			    report.cell_counts[dim] - integer_ranks[dim] - integer_ranks[dim + 1];
	}
	return report;
}

} // namespace treebraid
