#include "rhls/extremal.hpp"
#include "rhls/inequalities.hpp"
#include "rhls/operators.hpp"

#include <benchmark/benchmark.h>

using namespace rhls;

static void BM_KernelMatrix(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ZonalKernelMatrix K = make_kernel_matrix(1, 2.0, m);
    benchmark::DoNotOptimize(K.kernel.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelMatrix)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_SphereApply(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ZonalKernelMatrix K = make_kernel_matrix(1, 2.0, m);
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const ZonalFn F = extremal_sphere({1.0, 0.3}, exps, m);
  for (auto _ : state) {
    std::vector<double> out = K.apply(F.values);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SphereApply)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Complexity();

static void BM_RadialOperator(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const RadialFn f = extremal_rn({1.0, 1.0}, exps, 16.0, m);
  for (auto _ : state) {
    RadialOpResult r = radial_operator(f, exps);
    benchmark::DoNotOptimize(r.fn.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RadialOperator)->Arg(257)->Arg(513)->Arg(1025)->Arg(2049)->Complexity();

static void BM_FixedPointStep(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  ZonalFn F0 = make_zonal_grid(1, m);
  F0.values = random_positive_values(F0.size(), 11);
  for (auto _ : state) {
    // One damped update, including the kernel assembly that dominates it.
    MinimizeResult r = fixed_point_minimize(F0, exps, 0.5, 0.0, 1);
    benchmark::DoNotOptimize(r.F.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FixedPointStep)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_Quotient(benchmark::State& state) {
  const ExponentSet exps = make_critical_exponents(2, 3.0);
  const ZonalKernelMatrix K = make_kernel_matrix(2, 3.0, 256);
  const ZonalFn F = extremal_sphere({1.0, 0.5}, exps, 256);
  for (auto _ : state) {
    QuotientResult q = hls_quotient(K, F);
    benchmark::DoNotOptimize(q.quotient);
  }
}
BENCHMARK(BM_Quotient);

BENCHMARK_MAIN();
