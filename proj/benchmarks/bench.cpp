#include <benchmark/benchmark.h>

#include "friedrichs/evolution.hpp"
#include "friedrichs/hardy.hpp"
#include "friedrichs/model.hpp"
#include "friedrichs/spectral.hpp"

namespace {

using namespace friedrichs;

void BM_EtaSecond(benchmark::State& state) {
  const spectral::LevelShift ls(model::paper_params());
  const std::complex<double> w{1.94, -0.1};
  for (auto _ : state) benchmark::DoNotOptimize(ls.eta_second(w));
}
BENCHMARK(BM_EtaSecond);

void BM_FindPole(benchmark::State& state) {
  const spectral::LevelShift ls(model::paper_params());
  for (auto _ : state) benchmark::DoNotOptimize(spectral::find_pole(ls));
}
BENCHMARK(BM_FindPole);

void BM_Cn4Step(benchmark::State& state) {
  const model::DiscreteModel dm = model::paper_preset();
  const evolution::Cn4Stepper stepper(dm, 0.005);
  evolution::State psi = evolution::make_discrete_state(dm);
  for (auto _ : state) {
    stepper.step(psi);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_Cn4Step);

void BM_HardyProject(benchmark::State& state) {
  const auto f = hardy::SampledFunction::sample(
      40.0, static_cast<int>(state.range(0)),
      [](double w) { return std::exp(-0.1 * (w - 3.0) * (w - 3.0)); });
  for (auto _ : state)
    benchmark::DoNotOptimize(hardy::project(f, hardy::Sign::minus));
}
BENCHMARK(BM_HardyProject)->Arg(1024)->Arg(4096);

void BM_Diagonalize(benchmark::State& state) {
  // Box length 12 keeps the cutoff resolved at these mode counts.
  const model::DiscreteModel dm = model::discretize(
      model::paper_params(), 12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evolution::Spectrum(dm));
}
BENCHMARK(BM_Diagonalize)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
