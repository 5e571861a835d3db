#include <benchmark/benchmark.h>

#include "symlie/dipole.hpp"
#include "symlie/integrate.hpp"
#include "symlie/so3.hpp"

namespace {

using symlie::SO3;

void BM_So3Exp(benchmark::State& state) {
  const SO3 grp;
  const Eigen::Vector3d x(0.3, -0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(grp.exp(x));
}
BENCHMARK(BM_So3Exp);

void BM_So3Dexpinv(benchmark::State& state) {
  const SO3 grp;
  const Eigen::Vector3d x(0.3, -0.2, 0.5), y(1.0, 2.0, -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(grp.dexpinv(x, y));
}
BENCHMARK(BM_So3Dexpinv);

// Warm-started steps along the dipole trajectory, h = 0.01.
void step_bench(benchmark::State& state, symlie::Method m, const symlie::ButcherTableau& t) {
  const symlie::DipoleSystem sys;
  auto z = symlie::dipole_preset_initial_state(sys.params());
  symlie::StepConfig cfg;
  cfg.h = 0.01;
  symlie::StageState warm;
  long sweeps = 0;
  for (auto _ : state) {
    auto res = symlie::step(m, sys, z, cfg, t, &warm);
    z = res.z;
    sweeps += res.stages.iterations;
    warm = std::move(res.stages);
  }
  state.counters["sweeps"] = benchmark::Counter(static_cast<double>(sweeps), benchmark::Counter::kAvgIterations);
}

void BM_VrkmkStep(benchmark::State& state) {
  step_bench(state, symlie::Method::Vrkmk, symlie::gauss_tableau(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VrkmkStep)->DenseRange(1, 3);

void BM_VcgStep(benchmark::State& state) {
  const auto t = state.range(0) == 2 ? symlie::midpoint_tableau()
                                     : symlie::yoshida_dirk(static_cast<int>(state.range(0)));
  step_bench(state, symlie::Method::Vcg, t);
}
BENCHMARK(BM_VcgStep)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
