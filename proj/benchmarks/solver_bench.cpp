#include <benchmark/benchmark.h>

#include <cmath>

#include "lop/batch.hpp"
#include "lop/generator.hpp"
#include "lop/permutation.hpp"
#include "lop/solver.hpp"

namespace {

using namespace lop;

void BM_TangencyKernel(benchmark::State& state) {
    const Point p{0.0, 0.0};
    const Point q{7.3, 2.1};
    for (auto _ : state) {
        auto c = tangency_candidates(1.7, p, 2.0, q, 3.1);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_TangencyKernel);

void BM_Solve(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto inst = generate_instance(reference_family(size));
    const auto scheme = make_scheme(inst, size >= 10 ? 5 : 1, 1);
    const auto perm = sample_permutations(scheme, 1)[0];
    const SolverConfig config;
    for (auto _ : state) {
        Solution s = solve(inst, perm, config);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(size);
}
BENCHMARK(BM_Solve)->Arg(10)->Arg(20)->Arg(40)->Arg(55)->Complexity();

void BM_Batch100(benchmark::State& state) {
    const auto inst = generate_instance(reference_family(25));
    const auto scheme = make_scheme(inst, 5, 1);
    for (auto _ : state) {
        BatchReport r = run_batch(inst, scheme, 100, 1, SolverConfig{});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Batch100);

}  // namespace

BENCHMARK_MAIN();
