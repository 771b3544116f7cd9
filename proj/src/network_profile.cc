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

#include "dnnreuse/network_profile.h"

#include <omp.h>

#include <algorithm>
#include <exception>

#include "dnnreuse/statistics.h"

namespace dnnreuse {

namespace {

void require_annotated(const ModelGraph& graph) {
  if (!graph.shape_annotated()) {
    throw ShapeError("graph is not shape-annotated; run infer_shapes first", graph.name());
  }
}

bool bears_macs(LayerKind kind) { return kind == LayerKind::kConv || kind == LayerKind::kFc; }

}  // namespace

NetworkProfile make_profile(std::string model, std::uint64_t macs, std::uint64_t weights,
                            std::uint64_t activations, std::uint64_t peak_concurrent,
                            std::int64_t batch) {
  if (weights + activations == 0) {
    throw DegenerateError("profile of '" + model + "' has W + A = 0");
  }
  if (batch < 1) throw ArgumentError("batch must be >= 1");
  NetworkProfile p;
  p.model = std::move(model);
  p.macs = macs;
  p.weights = weights;
  p.activations = activations;
  p.peak_concurrent = peak_concurrent;
  p.batch = batch;

  const double mc = static_cast<double>(macs);
  const double w = static_cast<double>(weights);
  const double a = static_cast<double>(activations);
  p.ai_c = mc / (w + a);
  if (weights > 0) p.weight_reuse = mc / w;
  if (activations > 0) p.activation_reuse = mc / a;
  if (weights > 0) p.a_over_w = a / w;
  return p;
}

std::vector<LayerCost> layer_costs(const ModelGraph& graph) {
  require_annotated(graph);
  const auto n = static_cast<std::int64_t>(graph.size());
  std::vector<LayerCost> costs(graph.size());
  std::vector<std::exception_ptr> errors(graph.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      costs[i] = layer_cost(graph, static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return costs;
}

namespace serial {

std::vector<LayerCost> layer_costs(const ModelGraph& graph) {
  require_annotated(graph);
  std::vector<LayerCost> costs;
  costs.reserve(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) costs.push_back(layer_cost(graph, i));
  return costs;
}

}  // namespace serial

std::uint64_t produced_activations(const ModelGraph& graph) {
  require_annotated(graph);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.layer(i).produces_tensor()) {
      total += static_cast<std::uint64_t>(graph.output_shape(i).element_count());
    }
  }
  return total;
}

NetworkProfile aggregate(const ModelGraph& graph) {
  require_annotated(graph);
  LayerCost total;
  for (const auto& cost : layer_costs(graph)) total += cost;
  return make_profile(graph.name(), total.macs, total.weights, produced_activations(graph),
                      peak_concurrent_activations(graph));
}

double layer_intensity(const LayerCost& cost, std::uint64_t output_elements) {
  const auto denominator = cost.weights + output_elements;
  if (denominator == 0) throw DegenerateError("layer has no weights and no output");
  return static_cast<double>(cost.macs) / static_cast<double>(denominator);
}

LayerwiseStats layerwise_ai_stats(const ModelGraph& graph) {
  const auto costs = layer_costs(graph);
  LayerwiseStats stats;
  std::vector<double> values;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& layer = graph.layer(i);
    if (!bears_macs(layer.kind) || costs[i].macs == 0) continue;
    const auto out = static_cast<std::uint64_t>(graph.output_shape(i).element_count());
    const double ai = layer_intensity(costs[i], out);
    stats.per_layer.push_back({i, layer.name, ai});
    values.push_back(ai);
  }
  if (values.empty()) {
    throw DegenerateError("model '" + graph.name() + "' has no MAC-bearing layers");
  }
  stats.median = median(values);
  stats.variance = population_variance(values);
  return stats;
}

std::uint64_t peak_concurrent_activations(const ModelGraph& graph) {
  require_annotated(graph);
  const auto& order = graph.execution_order();
  const std::size_t n = graph.size();

  // Which tensor each layer's output refers to (aliases resolve to the
  // producing layer).
  std::vector<std::size_t> tensor_of(n);
  std::vector<std::size_t> step_of(n);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto i = order[s];
    step_of[i] = s;
    const auto& layer = graph.layer(i);
    tensor_of[i] = layer.produces_tensor() ? i : tensor_of[graph.producers(i).at(0)];
  }

  std::vector<std::size_t> last_use(n, 0);
  for (std::size_t i = 0; i < n; ++i) last_use[i] = step_of[i];
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (auto p : graph.producers(order[s])) {
      auto& use = last_use[tensor_of[p]];
      use = std::max(use, s);
    }
  }

  std::vector<std::vector<std::size_t>> release_at(order.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.layer(i).produces_tensor()) release_at[last_use[i]].push_back(i);
  }

  std::uint64_t live = 0;
  std::uint64_t peak = 0;
  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto i = order[s];
    if (graph.layer(i).produces_tensor()) {
      live += static_cast<std::uint64_t>(graph.output_shape(i).element_count());
    }
    peak = std::max(peak, live);
    for (auto t : release_at[s]) {
      live -= static_cast<std::uint64_t>(graph.output_shape(t).element_count());
    }
  }
  return peak;
}

NetworkProfile batch_scale(const NetworkProfile& profile, std::int64_t batch) {
  if (batch < 1) throw ArgumentError("batch must be >= 1, got " + std::to_string(batch));
  if (profile.batch != 1) {
    throw ArgumentError("batch_scale expects a batch-1 profile, got batch " +
                        std::to_string(profile.batch));
  }
  const auto b = static_cast<std::uint64_t>(batch);
  return make_profile(profile.model, profile.macs * b, profile.weights, profile.activations * b,
                      profile.peak_concurrent * b, batch);
}

}  // namespace dnnreuse
