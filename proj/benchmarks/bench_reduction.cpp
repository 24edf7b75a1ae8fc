#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "knc/reduction.hpp"

using namespace knc;
using namespace knc::bench;

namespace {

void BM_PTable(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    for (auto _ : state) {
        Reducer reducer(curve);
        benchmark::DoNotOptimize(reducer.p_table(8));
    }
}
BENCHMARK(BM_PTable)->Arg(1)->Arg(2)->Arg(4);

void BM_ReduceMonomialSweep(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    long n = curve.genus();
    for (auto _ : state) {
        Reducer reducer(curve);
        for (long e = -6 * n; e <= 6 * n; ++e) benchmark::DoNotOptimize(reducer.reduce(DifferentialForm::udt_monomial(e)));
    }
}
BENCHMARK(BM_ReduceMonomialSweep)->Arg(1)->Arg(2)->Arg(4);

void BM_ReduceOracle(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    long n = curve.genus();
    for (auto _ : state)
        for (long e = -3 * n; e <= 3 * n; ++e)
            benchmark::DoNotOptimize(reduce_oracle(curve, DifferentialForm::udt_monomial(e)));
}
BENCHMARK(BM_ReduceOracle)->Arg(1)->Arg(2);

}  // namespace
