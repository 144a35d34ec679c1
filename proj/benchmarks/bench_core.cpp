#include <benchmark/benchmark.h>

#include "waring/apolarity.hpp"
#include "waring/instances.hpp"
#include "waring/matrix.hpp"
#include "waring/points.hpp"
#include "waring/rank.hpp"

namespace {

using namespace waring;

MatrixQ dense_matrix(std::size_t n) {
    Rng rng(mix_seed(9001, n));
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(rng.uniform(-9, 9), 1 + rng.uniform(0, 4));
    return m;
}

void BM_rref(benchmark::State& state) {
    const MatrixQ m = dense_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_catalecticant_rank(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(mix_seed(9002, static_cast<std::uint64_t>(d)));
    const Form f = random_form(rng, 4, d, 8, 7);
    const int k = d / 2;
    for (auto _ : state) benchmark::DoNotOptimize(catalecticant_rank(f, k));
}
BENCHMARK(BM_catalecticant_rank)->Arg(4)->Arg(6)->Arg(8);

void BM_binary_rank(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(mix_seed(9003, static_cast<std::uint64_t>(d)));
    const Form f = random_binary_form(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(binary_rank(f));
}
BENCHMARK(BM_binary_rank)->Arg(6)->Arg(12)->Arg(20);

void BM_hilbert_function(benchmark::State& state) {
    const std::size_t count = static_cast<std::size_t>(state.range(0));
    Rng rng(mix_seed(9004, count));
    const PointSet z = random_point_set(rng, 3, count, 5, 0);
    const int t = static_cast<int>(count) / 2;
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(z, t));
}
BENCHMARK(BM_hilbert_function)->Arg(6)->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
