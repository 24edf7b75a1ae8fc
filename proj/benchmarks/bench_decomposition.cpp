#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "knc/central_rep.hpp"
#include "knc/decomposition.hpp"

using namespace knc;
using namespace knc::bench;

namespace {

void BM_ClassifyGroup(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify_group(curve));
}
BENCHMARK(BM_ClassifyGroup)->Arg(1)->Arg(2)->Arg(4);

void BM_ActionMatrices(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    auto profile = classify_group(curve);
    for (auto _ : state) {
        Reducer reducer(curve);
        benchmark::DoNotOptimize(rep_from_profile(reducer, profile));
    }
}
BENCHMARK(BM_ActionMatrices)->Arg(1)->Arg(2)->Arg(4);

void BM_CharacterTable(benchmark::State& state) {
    auto group = build_group(GroupFamily::Dicyclic, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character_table(group));
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(10)->Arg(20);

void BM_Decompose(benchmark::State& state) {
    auto curve = dihedral_curve(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(curve));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2)->Arg(4);

}  // namespace
