#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "dicke/eigensolver.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/kernels.hpp"
#include "dicke/sweep.hpp"

namespace {

// Gaussian weights on sorted angles, the shape of a ground-state density.
struct PurityInput {
  std::vector<double> weights;
  std::vector<double> angles;
};

PurityInput make_input(std::size_t points) {
  PurityInput in;
  const double h = 12.0 / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double q = -6.0 + h * static_cast<double>(i);
    in.weights.push_back(h * std::exp(-q * q) / std::sqrt(M_PI));
    in.angles.push_back(std::atan(q / 20.0));
  }
  return in;
}

void BM_PuritySerial(benchmark::State& state) {
  const auto in = make_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dicke::kernels::purity_sum_serial(in.weights, in.angles, 4096.0));
  state.SetComplexityN(state.range(0));
}

void BM_PurityParallel(benchmark::State& state) {
  const auto in = make_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dicke::kernels::purity_sum_parallel(in.weights, in.angles, 4096.0));
  state.SetComplexityN(state.range(0));
}

void BM_SolveGround(benchmark::State& state) {
  const int n = 1 << state.range(0);
  const auto p = dicke::DimensionlessParams::from_alpha(1.0, 10.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(dicke::solve_ground(dicke::full_profile(p)).energy);
}

void BM_Sweep(benchmark::State& state) {
  dicke::SweepConfig config;
  config.alphas = {0.0, 0.5, 1.0, 1.5, 2.0};
  config.n_values = {16, 256, 4096};
  config.with_entanglement = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(dicke::run_sweep(config).size());
}

}  // namespace

BENCHMARK(BM_PuritySerial)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_PurityParallel)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_SolveGround)->DenseRange(4, 20, 8);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
