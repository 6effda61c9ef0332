// Microbenchmarks for the hot pieces of a sweep: generator assembly, the
// bordered steady-state solve, and the two concurrence paths.  Run with
// --benchmark_min_time=... as usual; nothing here is registered with ctest.

#include <benchmark/benchmark.h>

#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/entanglement.hpp"
#include "duet/liouvillian.hpp"
#include "duet/solver.hpp"

namespace {

duet::SystemParams resonant_point() {
  duet::SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  return p;
}

void BM_build_full_generator(benchmark::State& state) {
  const duet::SystemParams p = resonant_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(duet::build_full_generator(p));
  }
}
BENCHMARK(BM_build_full_generator);

void BM_steady_state(benchmark::State& state) {
  const duet::Matrix16 g = duet::build_full_generator(resonant_point());
  for (auto _ : state) {
    benchmark::DoNotOptimize(duet::steady_state(g));
  }
}
BENCHMARK(BM_steady_state);

void BM_concurrence_general(benchmark::State& state) {
  const duet::Matrix16 g = duet::build_full_generator(resonant_point());
  const duet::Matrix4 rho = duet::steady_state(g).rho;
  for (auto _ : state) {
    benchmark::DoNotOptimize(duet::concurrence_general(rho));
  }
}
BENCHMARK(BM_concurrence_general);

void BM_analytic_xstate(benchmark::State& state) {
  const duet::SystemParams p = resonant_point();
  const double gamma12 = duet::compute_u12(p).gamma12;
  for (auto _ : state) {
    const duet::DressedParams dp = duet::dressed_params(p, gamma12);
    const duet::XState x =
        duet::analytic_steady_state(dp, duet::SecularForm::resonant_mutual);
    benchmark::DoNotOptimize(duet::concurrence_xstate(x));
  }
}
BENCHMARK(BM_analytic_xstate);

}  // namespace

BENCHMARK_MAIN();
