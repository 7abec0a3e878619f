// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "multimode/graph.hpp"
#include "multimode/kernels.hpp"
#include "multimode/random.hpp"

namespace {

mm::MultimodeGraph bench_graph(int n) {
    mm::Rng rng(42);
    mm::RandomGraphSpec s;
    s.n = n;
    s.k = 3;
    s.p = 4.0 / n;
    s.max_w = 5;
    s.connected = true;
    return mm::random_graph(s, rng);
}

mm::BoolMatrix bench_bits(int n, std::uint64_t seed) {
    mm::Rng rng(seed);
    mm::BoolMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng() % 8 == 0) m.set(i, j);
    return m;
}

mm::DistanceMatrix bench_dist(int n, std::uint64_t seed) {
    mm::Rng rng(seed);
    mm::DistanceMatrix m(n, n);
    for (auto& x : m.a) x = rng() % 4 == 0 ? mm::kInf : static_cast<mm::Dist>(rng() % 100);
    return m;
}

void BM_ExactParameters(benchmark::State& st) {
    auto g = bench_graph(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(mm::exact_parameters(g).diameter);
}
void BM_ExactParametersSerial(benchmark::State& st) {
    auto g = bench_graph(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(mm::exact_parameters_serial(g).diameter);
}

void BM_BoolMatmul(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto a = bench_bits(n, 1), b = bench_bits(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mm::bool_matmul(a, b).popcount());
}
void BM_BoolMatmulSerial(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto a = bench_bits(n, 1), b = bench_bits(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mm::bool_matmul_serial(a, b).popcount());
}

void BM_MinPlus(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto a = bench_dist(n, 1), b = bench_dist(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mm::min_plus_product(a, b).a.data());
}
void BM_MinPlusSerial(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto a = bench_dist(n, 1), b = bench_dist(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(mm::min_plus_product_serial(a, b).a.data());
}

}  // namespace

BENCHMARK(BM_ExactParameters)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactParametersSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoolMatmul)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoolMatmulSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinPlus)->Arg(128)->Arg(384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinPlusSerial)->Arg(128)->Arg(384)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
