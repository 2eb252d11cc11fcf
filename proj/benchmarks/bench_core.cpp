#include "rpa/rpa.hpp"

#include <benchmark/benchmark.h>

using namespace rpa;

namespace {

const Filter &frechet() {
    static const Filter f = Filter::frechet();
    return f;
}

void BM_GermMultiply(benchmark::State &state) {
    Sampler s(1, SampleOptions{.max_terms = static_cast<int>(state.range(0))});
    const Germ a = s.germ(), b = s.germ();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GermMultiply)->Arg(2)->Arg(4)->Arg(8);

void BM_Compare(benchmark::State &state) {
    Sampler s(2);
    const RpaReal a = s.real(frechet()), b = s.real(frechet());
    for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_Compare);

void BM_SqrtSeries(benchmark::State &state) {
    const RpaReal x(Germ(Puiseux({Term{Rational(2), Rational(1)}, Term{Rational(0), Rational(1)}})), frechet());
    const auto terms = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_nonneg(x, terms));
}
BENCHMARK(BM_SqrtSeries)->Arg(4)->Arg(8)->Arg(16);

void BM_InnerProduct(benchmark::State &state) {
    Sampler s(3);
    const Grid g = s.aligned_grid(static_cast<std::size_t>(state.range(0)), frechet());
    const StepWave x = s.wave(g), y = s.wave(g);
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(x, y));
}
BENCHMARK(BM_InnerProduct)->Arg(2)->Arg(8)->Arg(32);

void BM_Heisenberg(benchmark::State &state) {
    Sampler s(4, SampleOptions{.integral_exponents = true, .max_modulus = 2, .max_terms = 2});
    const Grid g = s.monomial_grid(static_cast<std::size_t>(state.range(0)), frechet());
    const GridOperator a = s.hermitian(g), b = s.hermitian(g);
    const StepWave psi = s.normalizable_wave(g);
    for (auto _ : state) benchmark::DoNotOptimize(heisenberg_holds(a, b, psi));
}
BENCHMARK(BM_Heisenberg)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
