#include <benchmark/benchmark.h>

#include <vector>

#include "gaugeqed/dynamics.hpp"
#include "gaugeqed/fock.hpp"
#include "gaugeqed/ground_state.hpp"
#include "gaugeqed/observables.hpp"

namespace {

using namespace gaugeqed;

const CouplingEnvelope kBox{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
const ModelParams kParams{0.5, 1.0, 0.0};

void BM_EnvelopeValue(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope_value(kBox, t));
    t += 0.01;
  }
}
BENCHMARK(BM_EnvelopeValue);

void BM_BuildGenerator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_generator(kParams, kBox, t, StandardVariant{}));
    t += 0.01;
  }
}
BENCHMARK(BM_BuildGenerator);

void BM_EvolveBoxWindow(benchmark::State& state) {
  const std::vector<double> grid{0.0, 24.0};
  for (auto _ : state) {
    const auto traj = evolve(vacuum_state(), kParams, kBox, StandardVariant{}, grid, {});
    benchmark::DoNotOptimize(photon_number(traj.states.back(), Mode::cavity));
  }
}
BENCHMARK(BM_EvolveBoxWindow)->Unit(benchmark::kMillisecond);

void BM_GroundStateClosedForms(benchmark::State& state) {
  double alpha = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ground_state_mutual_information(kParams, alpha));
    benchmark::DoNotOptimize(ground_state_photon_number(kParams, alpha));
    alpha = alpha < 1.0 ? alpha + 1e-4 : 0.0;
  }
}
BENCHMARK(BM_GroundStateClosedForms);

void BM_FockApplyHamiltonian(benchmark::State& state) {
  const FockSystem sys(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const FockCoefficients coeffs =
      fock_coefficients(kParams, kBox, 7.0, StandardVariant{});
  Eigen::VectorXcd in = sys.vacuum();
  Eigen::VectorXcd out(sys.dim());
  for (auto _ : state) {
    sys.apply_hamiltonian(coeffs, {in.data(), static_cast<std::size_t>(sys.dim())},
                          {out.data(), static_cast<std::size_t>(sys.dim())});
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FockApplyHamiltonian)->Arg(30)->Arg(60);

void BM_FockGroundState(benchmark::State& state) {
  const FockSystem sys(30, 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_ground_state(sys, kParams, 0.0));
  }
}
BENCHMARK(BM_FockGroundState)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
