#include <benchmark/benchmark.h>

#include "spinlab/dirac_lattice.hpp"
#include "spinlab/random.hpp"
#include "spinlab/spin_group.hpp"

using namespace spinlab;

static void BM_BladeProduct(benchmark::State& state) {
    const Signature sig(static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)) - static_cast<int>(state.range(0)) / 2);
    const Mask count = Mask{1} << sig.n();
    Mask a = 0, b = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(blade_product(a, b, sig));
        a = (a + 1) % count;
        b = (b + 3) % count;
    }
}
BENCHMARK(BM_BladeProduct)->Arg(4)->Arg(8)->Arg(16);

static void BM_GeometricProductDouble(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(1);
    const RealMV x = random_versor(n, n, rng), y = random_versor(n, n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProductDouble)->DenseRange(4, 10, 2);

static void BM_GeometricProductRational(benchmark::State& state) {
    const Signature sig(static_cast<int>(state.range(0)), 0);
    Rng rng(2);
    const auto x = random_rational(sig, rng, 1.0), y = random_rational(sig, rng, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProductRational)->DenseRange(2, 8, 2);

static void BM_LiftRotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(3);
    const Eigen::MatrixXd r = random_rotation(n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(lift_rotation(r));
}
BENCHMARK(BM_LiftRotation)->DenseRange(3, 8);

static void BM_FlatDiracAssembly(benchmark::State& state) {
    const TorusGrid grid(2, static_cast<int>(state.range(0)));
    const MatrixRep rep = pauli_generators(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_flat_dirac(grid, rep, Scheme::central));
}
BENCHMARK(BM_FlatDiracAssembly)->Arg(16)->Arg(64)->Arg(128);

static void BM_SpincIndex(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spinc_index(L, 1));
}
BENCHMARK(BM_SpincIndex)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
