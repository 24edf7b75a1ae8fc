#include <benchmark/benchmark.h>

#include <random>

#include "bench_common.hpp"

using namespace knc;

namespace {

CycloElem random_elem(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    std::vector<Rational> raw(order);
    for (auto& x : raw) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloElem::from_raw(order, raw);
}

void BM_CycloMultiply(benchmark::State& state) {
    std::mt19937 rng(7);
    auto order = static_cast<unsigned>(state.range(0));
    CycloElem a = random_elem(rng, order), b = random_elem(rng, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(3)->Arg(8)->Arg(12)->Arg(30);

void BM_CycloInverse(benchmark::State& state) {
    std::mt19937 rng(8);
    CycloElem a = random_elem(rng, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse)->Arg(3)->Arg(8)->Arg(12)->Arg(30);

}  // namespace
