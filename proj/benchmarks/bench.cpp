#include <benchmark/benchmark.h>

#include "helix/catalog.hpp"
#include "helix/p2.hpp"
#include "helix/perp.hpp"
#include "helix/tree.hpp"

using namespace helix;

static void BM_EulerPair(benchmark::State& state) {
    const ChernCharacter a{Rational(339), Rational(100), Rational(-70), Rational(50, 3)};
    const ChernCharacter b{Rational(107), Rational(69), Rational(-9, 2), Rational(-57, 2)};
    for (auto _ : state) {
        auto chi = euler_pair(a, b);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_EulerPair);

static void BM_Perp(benchmark::State& state) {
    for (auto _ : state) {
        auto v = perp(ch_line(0), ch_line(1), ch_line(2));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Perp);

// Cold evaluation of the deepest left-chain index of a given order,
// including the whole foundation recursion.
static void BM_EpsilonCold(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const ThreeAdic t(1, order);
    for (auto _ : state) {
        EpsilonMap eps;
        auto v = eps.epsilon(t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EpsilonCold)->DenseRange(2, 10, 2);

static void BM_EpsilonSweep(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        EpsilonMap eps;
        for (const ThreeAdic& t : enumerate_indices(order)) {
            auto v = eps.epsilon(t);
            benchmark::DoNotOptimize(v);
        }
    }
}
BENCHMARK(BM_EpsilonSweep)->DenseRange(2, 6, 2);

static void BM_TreeBuild(benchmark::State& state) {
    const unsigned depth = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto tree = build_tree(depth);
        benchmark::DoNotOptimize(tree.verts.size());
    }
}
BENCHMARK(BM_TreeBuild)->DenseRange(1, 4, 1);

static void BM_P2Delta(benchmark::State& state) {
    const unsigned cutoff = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        P2Map map;
        auto b = delta_of_mu(map, Rational(1, 2), cutoff);
        benchmark::DoNotOptimize(b.value);
    }
}
BENCHMARK(BM_P2Delta)->DenseRange(2, 10, 2);

static void BM_AuditTable(benchmark::State& state) {
    for (auto _ : state) {
        EpsilonMap eps;
        auto rows = audit_table(eps);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_AuditTable);

BENCHMARK_MAIN();
