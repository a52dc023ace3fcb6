// Serial reference against the OpenMP path for the heavy kernels. On a
// single core the parallel variant measures scheduling overhead only.
#include "bethe/integral_rep.hpp"
#include "bethe/spectral_rep.hpp"

#include <benchmark/benchmark.h>

using namespace bethe;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_ContinuumPart(benchmark::State& st) {
  PrecisionGuard g(160);
  SpectralOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(continuum_contribution(QuantumState(10, 3), 30, o));
}

void BM_BoundPart(benchmark::State& st) {
  PrecisionGuard g(160);
  SpectralOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(bound_contribution(QuantumState(10, 3), 30, o));
}

void BM_IntegralOnce(benchmark::State& st) {
  PrecisionGuard g(192);
  IntegralOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(bethe_integral_once(QuantumState(6, 2), 30, o));
}

}  // namespace

BENCHMARK(BM_ContinuumPart)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundPart)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegralOnce)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
