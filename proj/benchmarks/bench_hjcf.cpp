#include <benchmark/benchmark.h>

#include "qhpp/hjcf.hpp"

namespace {

qhpp::HJFraction chain_of(std::int64_t length, long long entry) {
    return qhpp::HJFraction(std::vector<qhpp::Integer>(static_cast<std::size_t>(length), entry));
}

void BM_Determinant(benchmark::State& state) {
    const auto w = chain_of(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::determinant(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ExpandRoundTrip(benchmark::State& state) {
    const auto r = qhpp::evaluate(chain_of(state.range(0), 5));
    const auto q = qhpp::numerator_of(r), q1 = qhpp::denominator_of(r);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::evaluate(qhpp::expand(q, q1)));
}
BENCHMARK(BM_ExpandRoundTrip)->RangeMultiplier(4)->Range(4, 256);

void BM_Discrepancies(benchmark::State& state) {
    const auto w = chain_of(state.range(0), 2).bumped(1);
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::discrepancy_coefficients(w));
}
BENCHMARK(BM_Discrepancies)->RangeMultiplier(4)->Range(4, 256);

void BM_PatternClosedForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qhpp::pattern_determinant(40, 7, 9, 40));
}
BENCHMARK(BM_PatternClosedForm);

}  // namespace
