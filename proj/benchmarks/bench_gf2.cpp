#include <benchmark/benchmark.h>

#include <random>

#include "trispace/edge_spaces.hpp"
#include "trispace/gf2_basis.hpp"
#include "trispace/sample.hpp"
#include "trispace/trial.hpp"

namespace {

trispace::BitVec random_vec(std::mt19937_64& rng, std::size_t len) {
    trispace::BitVec v(len);
    for (std::size_t w = 0; w < len; w += 64) {
        std::uint64_t bits = rng();
        for (int b = 0; b < 64 && w + static_cast<std::size_t>(b) < len; ++b)
            if (bits & (std::uint64_t{1} << b)) v.set(w + static_cast<std::size_t>(b));
    }
    return v;
}

// Target envelope: 25k inserts at length 8k in well under 10 s.
void BM_BasisInsert(benchmark::State& state) {
    const std::size_t len = static_cast<std::size_t>(state.range(0));
    const std::size_t count = static_cast<std::size_t>(state.range(1));
    std::mt19937_64 rng(12345);
    std::vector<trispace::BitVec> vecs;
    vecs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) vecs.push_back(random_vec(rng, len));

    for (auto _ : state) {
        trispace::Gf2Basis basis(len);
        for (const auto& v : vecs) basis.insert(v);
        benchmark::DoNotOptimize(basis.rank());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(count) * state.iterations());
}
BENCHMARK(BM_BasisInsert)
    ->Args({1000, 2000})
    ->Args({4000, 8000})
    ->Args({8000, 25000})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_TriangleRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double c = static_cast<double>(state.range(1)) / 100.0;
    const trispace::Graph g = trispace::sample_gnp(n, trispace::threshold_p(n, c), 7);
    const trispace::TriangleSet tri = trispace::triangles(g);
    const int stop = trispace::cycle_space_dim(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(trispace::triangle_space_dim(g, tri, stop));
}
BENCHMARK(BM_TriangleRank)
    ->Args({300, 100})
    ->Args({300, 135})
    ->Args({300, 150})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_TriangleEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const trispace::Graph g = trispace::sample_gnp(n, trispace::threshold_p(n, 1.35), 7);
    for (auto _ : state) benchmark::DoNotOptimize(trispace::triangles(g).count());
}
BENCHMARK(BM_TriangleEnumeration)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
