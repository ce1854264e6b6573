#include <benchmark/benchmark.h>

#include "diaglab/catalog.hpp"
#include "diaglab/grade.hpp"
#include "diaglab/hypergeom.hpp"

using namespace diaglab;

namespace {

void BM_ExpandFourVariableDiagonal(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    DiagonalRep rep = straubRep();
    for (auto _ : state) {
        auto ms = expand(rep.expr, std::vector<int>(4, order));
        benchmark::DoNotOptimize(diagonal(ms, 3));
    }
}
BENCHMARK(BM_ExpandFourVariableDiagonal)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GuessOrderThree(benchmark::State& state) {
    UniSeries f = aperySeries(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(guessOperator(f, 3, 4));
}
BENCHMARK(BM_GuessOrderThree)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_NilHypergeometric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HypergeomParams p(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, 2)),
                      std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    DiffOp op = hgOperator(p);
    for (auto _ : state) benchmark::DoNotOptimize(nilIndex(op));
}
BENCHMARK(BM_NilHypergeometric)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_ConstantTermSeries(benchmark::State& state) {
    const int ell = static_cast<int>(state.range(0));
    RationalExpr g = bananaLaurent(ell);
    for (auto _ : state) benchmark::DoNotOptimize(constantTermSeries(g, 12));
}
BENCHMARK(BM_ConstantTermSeries)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_HadamardLong(benchmark::State& state) {
    UniSeries f = hgCoeffs(HypergeomParams({Rational(1, 2)}, {Rational(1)}),
                           static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hadamard(f, f));
}
BENCHMARK(BM_HadamardLong)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
