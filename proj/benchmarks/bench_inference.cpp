// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "verimap/inference.hpp"
#include "verimap/model_io.hpp"

namespace {

using verimap::bench::make_chain_model;

void BM_PartitionZ(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verimap::partition_z(model));
  }
}
BENCHMARK(BM_PartitionZ)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_MapConstrained(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verimap::map_constrained(model));
  }
}
BENCHMARK(BM_MapConstrained)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_MarginalConstrained(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verimap::marginal_constrained(model, 0));
  }
}
BENCHMARK(BM_MarginalConstrained)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateModels(benchmark::State& state) {
  verimap::Model model = make_chain_model(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verimap::enumerate_models(model.constraint(), model));
  }
}
BENCHMARK(BM_EnumerateModels)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_LoadModel(benchmark::State& state) {
  std::string text =
      verimap::canonical_serialization(make_chain_model(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verimap::load_model(text));
  }
}
BENCHMARK(BM_LoadModel)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
