#include <benchmark/benchmark.h>

#include "dicolor/bounds.hpp"
#include "dicolor/dichromatic.hpp"
#include "dicolor/generate.hpp"
#include "dicolor/lmatrix.hpp"
#include "dicolor/seq_coloring.hpp"

using namespace dicolor;

namespace {

void BM_chromatic_exact(benchmark::State& state) {
    UndirectedGraph g = underlying_graph(
        random_digraph(static_cast<int>(state.range(0)), 0.4, true, 42));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number_exact(g).color_count);
    }
}
BENCHMARK(BM_chromatic_exact)->Arg(12)->Arg(16)->Arg(20);

void BM_chi_d_exact(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, true, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_d_exact(d).chi_d);
    }
}
BENCHMARK(BM_chi_d_exact)->Arg(10)->Arg(14)->Arg(18);

void BM_beta_oc(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, true, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_oc(d).size);
    }
}
BENCHMARK(BM_beta_oc)->Arg(12)->Arg(16)->Arg(20);

void BM_order_scan(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.35, true, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_orders(d).max_exact.color_count);
    }
}
BENCHMARK(BM_order_scan)->Arg(6)->Arg(7)->Arg(8);

void BM_psi_sd(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.35, true, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi_sd(d).order);
    }
}
BENCHMARK(BM_psi_sd)->Arg(7)->Arg(9);

void BM_lmatrix_validate(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    LMatrix m = encode(LabeledDigraph{random_digraph(p, 0.4, true, 9),
                                      random_labeling(p, 4, 13)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate(m).valid);
    }
}
BENCHMARK(BM_lmatrix_validate)->Arg(16)->Arg(32)->Arg(64);

void BM_validity_check(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    Digraph d = random_digraph(p, 0.05, true, 17);
    GraphColoring g = greedy_color_graph(underlying_graph(d), [&] {
        std::vector<int> order(p);
        for (int i = 0; i < p; ++i) order[i] = i;
        return order;
    }());
    Coloring c = Coloring::from_colors(g.colors);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_valid_coloring(d, c).valid);
    }
}
BENCHMARK(BM_validity_check)->Arg(100)->Arg(400)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
