#include <benchmark/benchmark.h>

#include "fcomp/families.hpp"
#include "fcomp/prefix_automaton.hpp"
#include "fcomp/search.hpp"
#include "fcomp/shortest_word.hpp"

namespace {

void BM_DecideSk(benchmark::State& state) {
	const auto set = fcomp::s_k(static_cast<std::size_t>(state.range(0)));
	const fcomp::PrefixAutomaton automaton(set);
	for (auto _ : state) {
		auto v = fcomp::decide(automaton);
		benchmark::DoNotOptimize(v.uwl);
	}
}
BENCHMARK(BM_DecideSk)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_DecideExtreme4(benchmark::State& state) {
	const fcomp::PrefixAutomaton automaton(fcomp::extreme_set("extreme4"));
	for (auto _ : state) {
		auto v = fcomp::decide(automaton);
		benchmark::DoNotOptimize(v.uwl);
	}
}
BENCHMARK(BM_DecideExtreme4)->Unit(benchmark::kMicrosecond);

void BM_AutomatonBuild(benchmark::State& state) {
	const auto set = fcomp::r_k(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state) {
		fcomp::PrefixAutomaton automaton(set);
		benchmark::DoNotOptimize(automaton.node_count());
	}
}
BENCHMARK(BM_AutomatonBuild)->Arg(7)->Arg(10);

void BM_IsUncompletableOmega(benchmark::State& state) {
	const auto k = static_cast<std::size_t>(state.range(0));
	const fcomp::PrefixAutomaton automaton(fcomp::s_k(k));
	const auto w = fcomp::omega({k, {}});
	for (auto _ : state) {
		benchmark::DoNotOptimize(automaton.is_uncompletable(w));
	}
}
BENCHMARK(BM_IsUncompletableOmega)->Arg(4)->Arg(8);

void BM_SmallOracleSweep(benchmark::State& state) {
	fcomp::detail::SmallCompletenessOracle oracle(2);
	for (auto _ : state) {
		int complete = 0;
		for (std::uint32_t s = 0; s < 64; ++s) {
			complete += oracle.is_complete(s) ? 1 : 0;
		}
		benchmark::DoNotOptimize(complete);
	}
}
BENCHMARK(BM_SmallOracleSweep);

void BM_SearchN3(benchmark::State& state) {
	for (auto _ : state) {
		auto report = fcomp::exhaustive_search({3, {}, true, 1});
		benchmark::DoNotOptimize(report.maximal_sets);
	}
}
BENCHMARK(BM_SearchN3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
