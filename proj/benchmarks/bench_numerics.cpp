#include <arrc/numerics.hpp>
#include <arrc/theta.hpp>

#include <benchmark/benchmark.h>

using namespace arrc;

static void BM_ZetaDerivNeg1(benchmark::State& state) {
    const long digits = state.range(0);
    for (auto _ : state) {
        Real v = num::zeta_deriv_neg(1, digits);
        benchmark::DoNotOptimize(v.to_double());
    }
}
BENCHMARK(BM_ZetaDerivNeg1)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_ThetaConstant(benchmark::State& state) {
    const long g = state.range(0);
    theta::Rng rng(4);
    theta::SiegelPoint omega = theta::random_siegel_point(g, 40, rng);
    auto evens = theta::enumerate_characteristics(g, theta::Parity::even);
    for (auto _ : state) {
        auto v = theta::theta_constant(evens[0], omega);
        benchmark::DoNotOptimize(v.value.re.to_double());
    }
}
BENCHMARK(BM_ThetaConstant)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Chi2(benchmark::State& state) {
    theta::Rng rng(4);
    theta::SiegelPoint omega = theta::random_siegel_point(2, 40, rng);
    for (auto _ : state) {
        Complex v = theta::chi(omega);
        benchmark::DoNotOptimize(v.re.to_double());
    }
}
BENCHMARK(BM_Chi2)->Unit(benchmark::kMillisecond);

static void BM_PeterssonInvarianceStep(benchmark::State& state) {
    theta::Rng rng(11);
    theta::SiegelPoint omega = theta::random_siegel_point(2, 40, rng);
    auto gamma = theta::random_symplectic(2, rng);
    for (auto _ : state) {
        theta::SiegelPoint moved = theta::sp_transform(omega, gamma);
        Real dev = abs(theta::petersson_norm_chi(omega) - theta::petersson_norm_chi(moved));
        benchmark::DoNotOptimize(dev.to_double());
    }
}
BENCHMARK(BM_PeterssonInvarianceStep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
