// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "distortion/curve.hpp"
#include "distortion/ddh.hpp"
#include "distortion/endo.hpp"
#include "distortion/torsion.hpp"

namespace {

using namespace distortion;

// y^2 = x^3 + 3x + 7 over primes near the given sizes.
Curve bench_curve(std::int64_t p) { return Curve(PrimeField(static_cast<std::uint64_t>(p)), 3, 7); }

void BM_CountSerial(benchmark::State& state) {
  const Curve c = bench_curve(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_serial(c));
}

void BM_CountParallel(benchmark::State& state) {
  const Curve c = bench_curve(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_parallel(c));
}

BENCHMARK(BM_CountSerial)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMillisecond);

struct DdhSetup {
  TorsionBasis basis;
  RationalEndomorphism phi;
  std::vector<DdhInstance> instances;
};

DdhSetup ddh_setup() {
  const Curve c(PrimeField(701), -35, 98);
  TorsionBasis basis(TorsionContext(c, 5), make_point(c, 224, 31), make_point(c, 573, 450));
  RationalEndomorphism phi = make_catalog_endo(kAlpha701, c);
  std::vector<DdhInstance> instances;
  for (std::uint64_t seed = 0; seed < 512; ++seed) instances.push_back(ddh_sample(basis, seed % 2 == 0, seed));
  return {std::move(basis), std::move(phi), std::move(instances)};
}

void BM_DdhSerial(benchmark::State& state) {
  const DdhSetup s = ddh_setup();
  for (auto _ : state) benchmark::DoNotOptimize(ddh_decide_batch_serial(s.basis, s.phi, s.instances));
}

void BM_DdhParallel(benchmark::State& state) {
  const DdhSetup s = ddh_setup();
  for (auto _ : state) benchmark::DoNotOptimize(ddh_decide_batch(s.basis, s.phi, s.instances));
}

BENCHMARK(BM_DdhSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DdhParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
