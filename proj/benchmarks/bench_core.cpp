#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include <pinchext/boundary.hpp>
#include <pinchext/extension.hpp>
#include <pinchext/gallery.hpp>
#include <pinchext/rational.hpp>

using namespace pinchext;

namespace {

cvec random_samples(std::size_t M) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0.0, 1.0);
    cvec s(M);
    for (auto& v : s) v = {n(rng), n(rng)};
    return s;
}

std::vector<DiscFunction> lines(int count) {
    std::vector<DiscFunction> out;
    for (int k = 1; k <= count; ++k) out.push_back(DiscFunction::monomial(1.0 / k, 1));
    return out;
}

} // namespace

static void BM_Analyze(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const cvec s = random_samples(M);
    for (auto _ : state) benchmark::DoNotOptimize(CircleFunction::analyze(s, 1.0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

static void BM_HardyProjection(benchmark::State& state) {
    const auto g = CircleFunction::analyze(random_samples(static_cast<std::size_t>(state.range(0))), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hardy_project_minus(g));
}
BENCHMARK(BM_HardyProjection)->Arg(256)->Arg(4096);

static void BM_DetectRational(benchmark::State& state) {
    const RationalPart rp({{0.3, 2, {1.0, 0.5}}, {cplx{-0.2, 0.4}, 1, {2.0}}, {0.0, 3, {0.1, 0.2, 0.3}}});
    const auto psi = CircleFunction::sample([&](cplx l) { return rp(l); }, 1.0, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(detect_rational(psi, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DetectRational)->Arg(6)->Arg(10)->Arg(16);

static void BM_DetectNotRational(benchmark::State& state) {
    const auto psi = CircleFunction::sample([](cplx l) { return std::exp(1.0 / l) - 1.0; }, 1.0, 256);
    for (auto _ : state) benchmark::DoNotOptimize(detect_rational(psi, 10));
}
BENCHMARK(BM_DetectNotRational);

static void BM_ExtensionTest(benchmark::State& state) {
    const auto f = gallery::remark1_ring();
    const auto phi = DiscFunction::constant(0.2);
    for (auto _ : state) benchmark::DoNotOptimize(extension_test(f, phi, 10));
}
BENCHMARK(BM_ExtensionTest);

static void BM_Ladder(benchmark::State& state) {
    const auto f = gallery::remark1_ring();
    const auto curves = lines(12);
    for (auto _ : state) benchmark::DoNotOptimize(coefficient_ladder(f, curves, static_cast<int>(state.range(0)), 10));
}
BENCHMARK(BM_Ladder)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Example1Growth(benchmark::State& state) {
    std::vector<int> ms;
    for (int m = 6; m <= 80; ++m) ms.push_back(m);
    for (auto _ : state) benchmark::DoNotOptimize(gallery::example1_growth_probe(1, 0.1, ms));
}
BENCHMARK(BM_Example1Growth);

BENCHMARK_MAIN();
