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

// Whole-network work/data totals, layer-wise intensity statistics, batch
// scaling and peak concurrent activations.
//
// Counting conventions:
//  * M_c and W are sums of the per-layer costs.
//  * Cumulative A counts every tensor exactly once: the network input plus
//    the output of every layer that produces a fresh tensor. In-place relu
//    and batchnorm alias their input and add nothing.
//  * Layer-wise intensity divides a layer's MACs by its weights plus the
//    tensor it produces, so summing the per-layer denominators reproduces
//    the single-count total.

#ifndef DNNREUSE_NETWORK_PROFILE_H_
#define DNNREUSE_NETWORK_PROFILE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnnreuse/layer_cost.h"
#include "dnnreuse/model_graph.h"

namespace dnnreuse {

struct NetworkProfile {
  std::string model;
  std::uint64_t macs = 0;
  std::uint64_t weights = 0;
  std::uint64_t activations = 0;
  std::uint64_t peak_concurrent = 0;
  std::int64_t batch = 1;

  // M_c / (W + A), MACs per data element.
  double ai_c = 0.0;
  std::optional<double> weight_reuse;      // M_c / W
  std::optional<double> activation_reuse;  // M_c / A
  std::optional<double> a_over_w;          // A / W
};

// Builds a profile from raw totals and fills in the derived ratios.
// Throws DegenerateError when W + A == 0.
NetworkProfile make_profile(std::string model, std::uint64_t macs, std::uint64_t weights,
                            std::uint64_t activations, std::uint64_t peak_concurrent = 0,
                            std::int64_t batch = 1);

// Per-layer costs of a shape-annotated graph, indexed like graph.layers().
// Layers are evaluated in parallel with OpenMP.
std::vector<LayerCost> layer_costs(const ModelGraph& graph);

// Elements of fresh tensors: input plus every non-aliasing layer output.
std::uint64_t produced_activations(const ModelGraph& graph);

NetworkProfile aggregate(const ModelGraph& graph);

struct LayerIntensity {
  std::size_t layer = 0;  // index into graph.layers()
  std::string name;
  double intensity = 0.0;
};

struct LayerwiseStats {
  std::vector<LayerIntensity> per_layer;  // conv and fc layers, declaration order
  double median = 0.0;
  double variance = 0.0;  // population variance
};

// MACs / (weights + output elements) of one MAC-bearing layer.
double layer_intensity(const LayerCost& cost, std::uint64_t output_elements);

// Throws DegenerateError when no layer performs MACs.
LayerwiseStats layerwise_ai_stats(const ModelGraph& graph);

// Runs layers in execution order; a tensor is live from its producer until
// its last consumer has run. Returns the largest sum of live tensors plus the
// current output over all steps. Aliasing layers extend their source
// tensor's lifetime instead of allocating.
std::uint64_t peak_concurrent_activations(const ModelGraph& graph);

// Scales a batch-1 profile to `batch` samples: M_c, A and the peak scale by
// B, W does not. Throws ArgumentError for batch < 1 or a profile that is
// already batched.
NetworkProfile batch_scale(const NetworkProfile& profile, std::int64_t batch);

namespace serial {

// Reference implementation of dnnreuse::layer_costs.
std::vector<LayerCost> layer_costs(const ModelGraph& graph);

}  // namespace serial

}  // namespace dnnreuse

#endif  // DNNREUSE_NETWORK_PROFILE_H_
