#include <benchmark/benchmark.h>

#include "relpoly/cutset.hpp"
#include "relpoly/exact.hpp"
#include "relpoly/generators.hpp"

namespace {

using namespace relpoly;

void BM_EnumerateNode(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = generate_er(n, 0.3, RngSeed{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::enumerate_node_coefficients(g, {.cap = 24, .workers = 1}));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EnumerateNode)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateLink(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = exact::family_graph({exact::Family::cycle, n});
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::enumerate_link_coefficients(g, {.cap = 24, .workers = 1}));
    }
}
BENCHMARK(BM_EnumerateLink)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EvalSForm(benchmark::State& state) {
    const auto coeffs = exact::family_node_coefficients({exact::Family::star, static_cast<std::size_t>(state.range(0))});
    double p = 0.0;
    for (auto _ : state) {
        p = p >= 0.99 ? 0.01 : p + 0.01;
        benchmark::DoNotOptimize(exact::eval_node_s_form(coeffs, p));
    }
}
BENCHMARK(BM_EvalSForm)->Arg(11)->Arg(101)->Arg(501);

void BM_CutRecovery(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto coeffs = exact::enumerate_node_coefficients(generate_er(n, 0.4, RngSeed{2}));
    for (auto _ : state) {
        const auto sys = cutset::build_probe_system_precise(
            n, [&](const PreciseReal& p) { return exact::eval_precise(coeffs, p); });
        benchmark::DoNotOptimize(cutset::recover_cut_counts(sys));
    }
}
BENCHMARK(BM_CutRecovery)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
