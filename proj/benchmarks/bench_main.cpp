#include <benchmark/benchmark.h>

#include "galvin/constructions.hpp"
#include "galvin/list_colouring.hpp"
#include "galvin/orientation.hpp"
#include "galvin/search.hpp"

using namespace galvin;

namespace {

// K4 block, a triangle, a four-cycle and a bridge glued in a chain.
MultiGraph block_chain() {
    return build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                            {3, 4}, {3, 5}, {4, 5},
                            {5, 6}, {6, 7}, {7, 8}, {5, 8},
                            {8, 9}});
}

void bench_verify_clique_witness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiGraph g = complete_graph(n);
    Witness w = construct_clique(n);
    for (auto _ : state) {
        PropernessReport r = verify_proper(g, w.partition, w.colouring, w.k);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(bench_verify_clique_witness)->Arg(5)->Arg(8)->Arg(10);

void bench_refute_k4(benchmark::State& state) {
    MultiGraph g = complete_graph(4);
    for (auto _ : state) {
        SearchOutcome out = search_proper(g, 3);
        benchmark::DoNotOptimize(out.status);
    }
}
BENCHMARK(bench_refute_k4);

void bench_search_petersen(benchmark::State& state) {
    MultiGraph g = petersen();
    for (auto _ : state) {
        SearchOutcome out = search_proper(g, 4);
        benchmark::DoNotOptimize(out.status);
    }
}
BENCHMARK(bench_search_petersen);

void bench_construct_clique(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Witness w = construct_clique(n);
        benchmark::DoNotOptimize(w.k);
    }
}
BENCHMARK(bench_construct_clique)->Arg(6)->Arg(10);

void bench_construct_block_chain(benchmark::State& state) {
    MultiGraph g = block_chain();
    for (auto _ : state) {
        Witness w = construct_no_long_odd(g);
        benchmark::DoNotOptimize(w.k);
    }
}
BENCHMARK(bench_construct_block_chain);

void bench_odd_cycle_check(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiGraph g = complete_graph(n);
    Witness w = construct_clique(n);
    GalvinOrientation o = galvin_orient(g, w.partition, w.colouring);
    for (auto _ : state) {
        OddCycleReport r = check_odd_cycles(o);
        benchmark::DoNotOptimize(r.bad_cycles.size());
    }
}
BENCHMARK(bench_odd_cycle_check)->Arg(6)->Arg(9);

void bench_list_edge_colour(benchmark::State& state) {
    MultiGraph g = complete_graph(4);
    Witness w = construct_clique(4);
    GalvinOrientation o = galvin_orient(g, w.partition, w.colouring);
    ListAssignment lists;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        lists.lists.push_back({2, 3, 5, 7});
    for (auto _ : state) {
        std::vector<Colour> a = list_edge_colour(g, o, lists);
        benchmark::DoNotOptimize(a.size());
    }
}
BENCHMARK(bench_list_edge_colour);

}  // namespace

BENCHMARK_MAIN();
