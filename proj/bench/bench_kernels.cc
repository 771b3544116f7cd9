// Copyright 2026 The dnnreuse Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP for the two parallel kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "dnnreuse/csv.h"
#include "dnnreuse/network_profile.h"
#include "dnnreuse/statistics.h"

namespace {

dnnreuse::ModelGraph load(const std::string& slug) {
  const std::string path = std::string(DNNREUSE_DATA_DIR) + "/models/" + slug + ".json";
  return dnnreuse::infer_shapes(dnnreuse::parse_model(dnnreuse::read_text_file(path), path));
}

struct SweepInput {
  std::vector<dnnreuse::ReuseRatios> reuse;
  std::vector<double> efficiency;
};

SweepInput sweep_input(std::size_t n) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(1.0, 500.0);
  SweepInput in;
  for (std::size_t i = 0; i < n; ++i) {
    in.reuse.push_back({u(rng), u(rng)});
    in.efficiency.push_back(u(rng));
  }
  return in;
}

void BM_LayerCostsSerial(benchmark::State& state) {
  const auto g = load("inception_resnet_v2");
  for (auto _ : state) benchmark::DoNotOptimize(dnnreuse::serial::layer_costs(g));
}

void BM_LayerCostsOmp(benchmark::State& state) {
  const auto g = load("inception_resnet_v2");
  for (auto _ : state) benchmark::DoNotOptimize(dnnreuse::layer_costs(g));
}

void BM_AlphaSweepSerial(benchmark::State& state) {
  const auto in = sweep_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dnnreuse::serial::alpha_sweep(in.reuse, in.efficiency, 0.001));
  }
}

void BM_AlphaSweepOmp(benchmark::State& state) {
  const auto in = sweep_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dnnreuse::alpha_sweep(in.reuse, in.efficiency, 0.001));
  }
}

}  // namespace

BENCHMARK(BM_LayerCostsSerial);
BENCHMARK(BM_LayerCostsOmp);
BENCHMARK(BM_AlphaSweepSerial)->Arg(25)->Arg(1000);
BENCHMARK(BM_AlphaSweepOmp)->Arg(25)->Arg(1000);

BENCHMARK_MAIN();
