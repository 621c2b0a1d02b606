#include <benchmark/benchmark.h>

#include "treebraid/cup.hpp"
#include "treebraid/homology.hpp"
#include "treebraid/morse.hpp"

using namespace treebraid;

static void bench_enumerate_cells(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	int dim = static_cast<int>(state.range(0));
	for (auto _ : state) {
		auto cells = enumerate_cells(tree, 4, dim);
		benchmark::DoNotOptimize(cells.data());
	}
}
BENCHMARK(bench_enumerate_cells)->Arg(0)->Arg(1)->Arg(2);

static void bench_classify_all(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	auto cells = enumerate_cells(tree, 4, static_cast<int>(state.range(0)));
	for (auto _ : state) {
		int critical = 0;
		for (const Cell& c : cells)
			critical += classify(tree, c) == CellStatus::critical;
		benchmark::DoNotOptimize(critical);
	}
	state.SetItemsProcessed(state.iterations() * static_cast<long long>(cells.size()));
}
BENCHMARK(bench_classify_all)->Arg(1)->Arg(2);

static void bench_betti(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	int n = static_cast<int>(state.range(0));
	for (auto _ : state) {
		auto betti = betti_numbers(tree, n);
		benchmark::DoNotOptimize(betti.data());
	}
}
BENCHMARK(bench_betti)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void bench_flow_infinity(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	MorseComplex morse(tree, 4);
	auto crit = morse.critical_cells(1);
	for (auto _ : state) {
		for (const Cell& c : crit) {
			Chain stable = morse.flow_infinity(c);
			benchmark::DoNotOptimize(stable.terms.size());
		}
	}
	state.SetItemsProcessed(state.iterations() * static_cast<long long>(crit.size()));
}
BENCHMARK(bench_flow_infinity)->Unit(benchmark::kMillisecond);

static void bench_ring_table(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	for (auto _ : state) {
		RingTable table = ring_table(tree, 4);
		benchmark::DoNotOptimize(table.pairing_rank);
	}
}
BENCHMARK(bench_ring_table)->Unit(benchmark::kMillisecond);

static void bench_gf2_rank(benchmark::State& state) {
	PlaneTree tree = PlaneTree::canonical_t_min();
	Complex complex(tree, 3);
	int dim = 1;
	std::vector<std::vector<int>> columns;
	columns.reserve(complex.cell_count(dim));
	for (int i = 0; i < complex.cell_count(dim); ++i) {
		std::vector<int> col;
		for (const auto& [row, sign] : complex.faces(dim, i))
			col.push_back(row);
		std::sort(col.begin(), col.end());
		columns.push_back(std::move(col));
	}
	for (auto _ : state) {
		auto copy = columns;
		benchmark::DoNotOptimize(gf2_rank(std::move(copy)));
	}
	state.SetLabel(std::to_string(columns.size()) + " columns");
}
BENCHMARK(bench_gf2_rank)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
