#include <benchmark/benchmark.h>

#include <numbers>

#include "qutrit/cascade.hpp"
#include "qutrit/majorana.hpp"

namespace {

using namespace qutrit;

void BM_Eigensystem(benchmark::State& state) {
  const Mat3 h = build_hamiltonian(CascadeParams(1.3, 0.7, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(eigensystem(h));
}
BENCHMARK(BM_Eigensystem);

void BM_EvolveClosedForm(benchmark::State& state) {
  const CascadeParams p(1.3, 0.7, 0.4);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_closed_form(p, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_EvolveClosedForm);

void BM_RK4(benchmark::State& state) {
  const Mat3 h = build_hamiltonian(CascadeParams(1.0, 0.7, 0.4));
  const double t_end = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_schrodinger(h, Vec3{1, 0, 0}, t_end, recommended_step(h)));
}
BENCHMARK(BM_RK4)->Arg(1)->Arg(20);

void BM_StarRoundTrip(benchmark::State& state) {
  const StarPair sp{Star::make(1.0, 1.0), Star::make(2.0, 4.0)};
  for (auto _ : state) benchmark::DoNotOptimize(state_to_stars(stars_to_state(sp)));
}
BENCHMARK(BM_StarRoundTrip);

void BM_Trajectory(benchmark::State& state) {
  const CascadeParams p(1.0, 3.0, 0.0);
  const auto grid = linspace(0.0, 4 * std::numbers::pi, 400);
  const auto source = state.range(0) ? ParamSource::Pipeline : ParamSource::ClosedForm;
  for (auto _ : state) benchmark::DoNotOptimize(angle_trajectory(p, grid, source));
}
BENCHMARK(BM_Trajectory)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
