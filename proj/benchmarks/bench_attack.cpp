// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "verimap/adversary.hpp"

namespace {

using verimap::bench::make_chain_model;

void BM_MinimalFlipRadius(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verimap::minimal_flip_radius(model, 0, verimap::Norm::TV));
  }
}
BENCHMARK(BM_MinimalFlipRadius)->Arg(2)->Arg(4)->Arg(6);

void BM_StabilityRadius(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verimap::stability_radius(model, verimap::Norm::TV));
  }
}
BENCHMARK(BM_StabilityRadius)->Arg(2)->Arg(4)->Arg(6);

void BM_CascadeReport(benchmark::State& state) {
  verimap::Model clean = make_chain_model(state.range(0));
  verimap::AttackResult attack =
      verimap::minimal_flip_radius(clean, 0, verimap::Norm::TV);
  verimap::Model attacked = clean.with_dist(0, attack.witness);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verimap::cascade_report(clean, attacked, 0));
  }
}
BENCHMARK(BM_CascadeReport)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
