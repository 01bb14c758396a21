#include <benchmark/benchmark.h>

#include "conekit/groebner.hpp"
#include "conekit/poly_io.hpp"

using namespace conekit;

// Each iteration builds a fresh Engine: engines memoize bases.
namespace {

Ideal katsura_like(const Field& field) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 5), field);
  return Ideal::parse(r, {"x0^2 + 2*x1^2 + 2*x2^2 + 2*x3^2 - x0*x4",
                          "2*x0*x1 + 2*x1*x2 + 2*x2*x3 - x1*x4",
                          "x1^2 + 2*x0*x2 + 2*x1*x3 - x2*x4",
                          "x0 + 2*x1 + 2*x2 + 2*x3 - x4"});
}

Ideal cubic_ci(const Field& field) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 5), field);
  return Ideal::parse(r, {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3", "x0*x1 + x2*x3 + 3*x4^2 - x1*x2",
                          "x0^2*x2 - 5*x3^2*x4 + x1*x2*x3"});
}

void BM_GroebnerKatsuraFp(benchmark::State& state) {
  Ideal ideal = katsura_like(Field::prime(31991));
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.groebner(ideal));
  }
}
BENCHMARK(BM_GroebnerKatsuraFp)->Unit(benchmark::kMillisecond);

void BM_GroebnerKatsuraQ(benchmark::State& state) {
  Ideal ideal = katsura_like(Field::rationals());
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.groebner(ideal));
  }
}
BENCHMARK(BM_GroebnerKatsuraQ)->Unit(benchmark::kMillisecond);

void BM_GroebnerCubicCompleteIntersection(benchmark::State& state) {
  Ideal ideal = cubic_ci(Field::prime(31991));
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.groebner(ideal));
  }
}
BENCHMARK(BM_GroebnerCubicCompleteIntersection)->Unit(benchmark::kMillisecond);

void BM_GroebnerQuadricPairLex(benchmark::State& state) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 4), Field::prime(31991));
  Ideal ideal = Ideal::parse(r, {"x0^2 + 3*x1*x2 - x3^2", "x0*x3 - 2*x1^2 + x2*x3"});
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.groebner(ideal, MonomialOrder::lex()));
  }
}
BENCHMARK(BM_GroebnerQuadricPairLex)->Unit(benchmark::kMillisecond);

void BM_HilbertCubicCompleteIntersection(benchmark::State& state) {
  Ideal ideal = cubic_ci(Field::prime(31991));
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.hilbert(ideal));
  }
}
BENCHMARK(BM_HilbertCubicCompleteIntersection)->Unit(benchmark::kMillisecond);

}  // namespace
