#include <benchmark/benchmark.h>

#include "pairweave/fock.hpp"
#include "pairweave/freeprob.hpp"
#include "pairweave/measures.hpp"
#include "pairweave/pairings.hpp"
#include "pairweave/psd.hpp"

using namespace pairweave;

static void BM_EnumeratePairings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long crossings = 0;
        for_each_pairing(n, [&](const Pairing& v) { crossings += static_cast<long>(crossing_set(v).size()); });
        benchmark::DoNotOptimize(crossings);
    }
}
BENCHMARK(BM_EnumeratePairings)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_BlockDecompose(benchmark::State& state) {
    const auto all = all_pairings(10);
    for (auto _ : state) {
        long blocks = 0;
        for (const auto& v : all) blocks += static_cast<long>(block_decompose(v).size());
        benchmark::DoNotOptimize(blocks);
    }
}
BENCHMARK(BM_BlockDecompose)->Unit(benchmark::kMillisecond);

static void BM_TqMomentPolys(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tq_moment_polys(TqRegime::nonnegative, order));
}
BENCHMARK(BM_TqMomentPolys)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_FockGram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<Rational> points = {Rational(1, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock_gram_psd(n, 2, points, FockRegime::nonnegative, PsdMethod::exact));
    }
}
BENCHMARK(BM_FockGram)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_HankelLdl(benchmark::State& state) {
    const auto m = mu_q_moments(Rational(-1, 2), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ldl_psd(hankel_matrix(m)));
}
BENCHMARK(BM_HankelLdl)->Arg(8)->Arg(16);

static void BM_Quadrature(benchmark::State& state) {
    MeasureParams params;
    params.q = Rational(-3, 4);
    const auto spec = make_measure(MeasureKind::mu_q, params);
    for (auto _ : state) benchmark::DoNotOptimize(quad_moments(spec, 10, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Quadrature)->Arg(64)->Arg(256);
BENCHMARK_MAIN();
