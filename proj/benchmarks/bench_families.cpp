#include <benchmark/benchmark.h>

#include "qhpp/families.hpp"
#include "qhpp/kollar.hpp"

namespace {

void BM_BuildT(benchmark::State& state) {
    const auto a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::build_T(a, a, a, a + 1));
}
BENCHMARK(BM_BuildT)->Arg(3)->Arg(10)->Arg(40);

void BM_ClassifyT(benchmark::State& state) {
    const auto a = state.range(0);
    const auto b = qhpp::build_T(a, a, a, a + 1);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::evaluate_build(b));
}
BENCHMARK(BM_ClassifyT)->Arg(3)->Arg(10)->Arg(40);

void BM_BuildAndClassifyS3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::evaluate_build(qhpp::build_S3(state.range(0))));
}
BENCHMARK(BM_BuildAndClassifyS3)->Arg(6)->Arg(30)->Arg(100);

void BM_KollarTypes(benchmark::State& state) {
    const qhpp::KollarParams p(4, 4, 4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::singularity_types(p));
}
BENCHMARK(BM_KollarTypes);

}  // namespace
