#include "triboq/binet.hpp"
#include "triboq/matrixrep.hpp"
#include "triboq/poly.hpp"
#include "triboq/sequences.hpp"
#include "triboq/series.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace triboq;

Poly dense_poly(int degree, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(-1000, 1000);
    std::vector<Int> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) {
        c = dist(rng);
    }
    coeffs.back() = 1;
    return Poly::from_coeffs(std::move(coeffs));
}

void BM_PolyMul(benchmark::State& state)
{
    std::mt19937 rng(42);
    const Poly a = dense_poly(static_cast<int>(state.range(0)), rng);
    const Poly b = dense_poly(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

void BM_SequenceCold(benchmark::State& state)
{
    for (auto _ : state) {
        TriSequence seq(Poly(0), Poly(1), Poly::x_pow(2));
        benchmark::DoNotOptimize(seq.at(state.range(0)));
    }
}
BENCHMARK(BM_SequenceCold)->Arg(32)->Arg(64)->Arg(128);

void BM_SequenceWarm(benchmark::State& state)
{
    TriSequence seq(Poly(0), Poly(1), Poly::x_pow(2));
    seq.at(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(seq.at(state.range(0)));
    }
}
BENCHMARK(BM_SequenceWarm)->Arg(128);

void BM_GfQuatExpansion(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_trib_quat(state.range(0)));
    }
}
BENCHMARK(BM_GfQuatExpansion)->Arg(10)->Arg(30)->Arg(60);

void BM_MatPow(benchmark::State& state)
{
    const Mat3<Poly> s = s_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_pow(s, state.range(0)));
    }
}
BENCHMARK(BM_MatPow)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveCubic(benchmark::State& state)
{
    double x0 = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_cubic(x0));
        x0 = x0 < 4.0 ? x0 + 1e-6 : 0.5; // defeat value caching
    }
}
BENCHMARK(BM_SolveCubic);

void BM_BinetQuat(benchmark::State& state)
{
    const CubicRoots roots = solve_cubic(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(binet_quat(QuatKind::Trib,
                                            state.range(0), roots));
    }
}
BENCHMARK(BM_BinetQuat)->Arg(10)->Arg(30);

} // namespace

BENCHMARK_MAIN();
