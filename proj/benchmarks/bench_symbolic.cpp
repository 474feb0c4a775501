#include <arrc/theorems.hpp>

#include <benchmark/benchmark.h>

using namespace arrc;

static void BM_Lemma23(benchmark::State& state) {
    const long g = state.range(0);
    for (auto _ : state) {
        auto r = theorems::lemma23(g);
        benchmark::DoNotOptimize(r.equal);
    }
}
BENCHMARK(BM_Lemma23)->DenseRange(2, 10, 2);

static void BM_Theorem24(benchmark::State& state) {
    const long g = state.range(0);
    for (auto _ : state) {
        auto r = theorems::theorem24(g);
        benchmark::DoNotOptimize(r.equal);
    }
}
BENCHMARK(BM_Theorem24)->DenseRange(2, 10, 2);

static void BM_Section4(benchmark::State& state) {
    for (auto _ : state) {
        auto rs = theorems::section4_assemble();
        benchmark::DoNotOptimize(rs.size());
    }
}
BENCHMARK(BM_Section4);

static void BM_Bernoulli(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        Rat b = bernoulli(n);
        benchmark::DoNotOptimize(b.get_num().get_ui());
    }
}
BENCHMARK(BM_Bernoulli)->Arg(10)->Arg(20)->Arg(30);

static void BM_GradedProduct(benchmark::State& state) {
    using namespace arrc::graded;
    const int trunc = static_cast<int>(state.range(0));
    auto ring = Ring::make({{"x", Locus::fiber, 1}, {"w", Locus::base, 1}}, trunc);
    GradedElement a = GradedElement::scalar(ring, Constant(1));
    GradedElement b = GradedElement::scalar(ring, Constant(1));
    for (int i = 0; i <= trunc; ++i)
        for (int j = 0; i + j <= trunc; ++j) {
            a.add_term({i, j}, Constant(rat(i + 1, j + 2)));
            b.add_term({i, j}, Constant(rat(j + 1, i + 2)));
        }
    for (auto _ : state) {
        GradedElement c = a * b;
        benchmark::DoNotOptimize(c.is_zero());
    }
}
BENCHMARK(BM_GradedProduct)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
