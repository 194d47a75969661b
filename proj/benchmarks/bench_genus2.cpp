#include "genus2/cup.hpp"
#include "genus2/family.hpp"
#include "genus2/igusa.hpp"
#include "genus2/monodromy.hpp"
#include "genus2/poly_gcd.hpp"
#include "genus2/vector_fields.hpp"

#include <benchmark/benchmark.h>

using namespace genus2;

static void BM_Discriminant(benchmark::State& st) {
    auto fam = HyperellipticFamily::quintic();
    for (auto _ : st) benchmark::DoNotOptimize(discriminant(fam));
}
BENCHMARK(BM_Discriminant)->Unit(benchmark::kMillisecond);

static void BM_GaussManin(benchmark::State& st) {
    auto fam = HyperellipticFamily::quintic();
    for (auto _ : st) benchmark::DoNotOptimize(gauss_manin(fam));
}
BENCHMARK(BM_GaussManin)->Unit(benchmark::kMillisecond);

static void BM_CupMatrix(benchmark::State& st) {
    auto fam = HyperellipticFamily::quintic();
    for (auto _ : st) benchmark::DoNotOptimize(cup_matrix(fam));
}
BENCHMARK(BM_CupMatrix)->Unit(benchmark::kMillisecond);

static void BM_MultivariateGcd(benchmark::State& st) {
    MPoly delta = discriminant(HyperellipticFamily::quintic());
    MPoly a = delta * delta.derivative(3), b = delta * delta.derivative(0);
    for (auto _ : st) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_MultivariateGcd)->Unit(benchmark::kMillisecond);

static void BM_FieldApply(benchmark::State& st) {
    const auto& mf = ModularFields::instance();
    RatFunc x(delta_poly());
    for (auto _ : st) benchmark::DoNotOptimize(mf.field(int(st.range(0))).apply(x));
}
BENCHMARK(BM_FieldApply)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_IgusaTransvectant(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(igusa_transvectant());
}
BENCHMARK(BM_IgusaTransvectant)->Unit(benchmark::kMillisecond);

static void BM_Mod2Closure(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(mod2_analysis());
}
BENCHMARK(BM_Mod2Closure)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
