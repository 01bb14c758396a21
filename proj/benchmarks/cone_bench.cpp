#include <benchmark/benchmark.h>

#include "conekit/cone_schemes.hpp"
#include "conekit/runner.hpp"

using namespace conekit;

namespace {

const std::string& preset_at(const benchmark::State& state) {
  return preset_names().at(static_cast<std::size_t>(state.range(0)));
}

void BM_OmegaGraphClosure(benchmark::State& state) {
  ConeData cd = preset(preset_at(state), Field::prime(kDefaultPrime));
  for (auto _ : state) {
    // Fresh builder per iteration: the builder memoizes.
    Engine engine;
    ConeBuilder builder(engine, cd);
    benchmark::DoNotOptimize(builder.omega_graph());
  }
  state.SetLabel(preset_at(state));
}
BENCHMARK(BM_OmegaGraphClosure)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SigmaFiberAtOne(benchmark::State& state) {
  ConeData cd = preset(preset_at(state), Field::prime(kDefaultPrime));
  const Field& f = cd.field;
  for (auto _ : state) {
    Engine engine;
    ConeBuilder builder(engine, cd);
    benchmark::DoNotOptimize(builder.sigma_fiber({f.one(), f.one()}));
  }
  state.SetLabel(preset_at(state));
}
BENCHMARK(BM_SigmaFiberAtOne)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_FullScenarioSinglePrime(benchmark::State& state) {
  ScenarioConfig cfg = preset_scenario(preset_at(state));
  RunOptions options;
  options.agreement = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg, options));
  state.SetLabel(preset_at(state));
}
BENCHMARK(BM_FullScenarioSinglePrime)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_EngineSoundness(benchmark::State& state) {
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine_soundness(engine, 3));
  }
}
BENCHMARK(BM_EngineSoundness)->Unit(benchmark::kMillisecond);

}  // namespace
