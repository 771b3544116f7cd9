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

#include "dnnreuse/layer_cost.h"

#include <string>
#include <vector>

namespace dnnreuse {

namespace {

using u64 = std::uint64_t;

u64 as_count(std::int64_t v) { return static_cast<u64>(v); }

}  // namespace

std::optional<double> LayerCost::weight_reuse() const {
  if (weights == 0) return std::nullopt;
  return static_cast<double>(macs) / static_cast<double>(weights);
}

std::optional<double> LayerCost::activation_reuse() const {
  if (activations == 0) return std::nullopt;
  return static_cast<double>(macs) / static_cast<double>(activations);
}

std::optional<double> LayerCost::arithmetic_intensity() const {
  if (weights + activations == 0) return std::nullopt;
  return static_cast<double>(macs) / static_cast<double>(weights + activations);
}

LayerCost& LayerCost::operator+=(const LayerCost& other) {
  macs += other.macs;
  weights += other.weights;
  activations += other.activations;
  return *this;
}

LayerCost conv_cost(const TensorShape& in, const ConvParams& conv, const TensorShape& out) {
  if (!in.valid() || !out.valid()) {
    throw ArgumentError("conv_cost: zero-dimension shape " + to_string(in) + " -> " +
                        to_string(out));
  }
  const auto g = conv.groups;
  if (g < 1 || in.channels % g != 0 || conv.out_channels % g != 0) {
    throw ArgumentError("conv_cost: groups " + std::to_string(g) + " must divide M=" +
                        std::to_string(in.channels) + " and N=" +
                        std::to_string(conv.out_channels));
  }
  if (out.channels != conv.out_channels) {
    throw ArgumentError("conv_cost: output shape has " + std::to_string(out.channels) +
                        " channels, parameters say " + std::to_string(conv.out_channels));
  }
  const u64 per_group_in = as_count(in.channels / g);
  const u64 kernel = as_count(conv.window.kernel_h) * as_count(conv.window.kernel_w);
  const u64 out_pixels = as_count(out.height) * as_count(out.width);

  LayerCost cost;
  cost.weights = per_group_in * as_count(conv.out_channels) * kernel;
  cost.macs = cost.weights * out_pixels;
  cost.activations = as_count(in.element_count()) + as_count(out.element_count());
  return cost;
}

LayerCost fc_cost(std::int64_t in_elements, std::int64_t out_features) {
  if (in_elements < 1 || out_features < 1) {
    throw ArgumentError("fc_cost: counts must be >= 1");
  }
  LayerCost cost;
  cost.macs = as_count(in_elements) * as_count(out_features);
  cost.weights = cost.macs;
  cost.activations = as_count(in_elements) + as_count(out_features);
  return cost;
}

LayerCost nonconv_cost(LayerKind kind, std::span<const TensorShape> in_shapes,
                       const TensorShape& out, bool in_place) {
  LayerCost cost;
  switch (kind) {
    case LayerKind::kConv:
    case LayerKind::kFc:
      throw ArgumentError("nonconv_cost: " + std::string(to_string(kind)) +
                          " is a MAC-bearing layer");
    case LayerKind::kInput:
      cost.activations = as_count(out.element_count());
      return cost;
    case LayerKind::kBatchNorm:
      cost.weights = 2 * as_count(out.channels);
      [[fallthrough]];
    case LayerKind::kRelu:
      if (in_place) return cost;
      [[fallthrough]];
    case LayerKind::kPool:
    case LayerKind::kAdd:
    case LayerKind::kConcat:
      for (const auto& s : in_shapes) cost.activations += as_count(s.element_count());
      cost.activations += as_count(out.element_count());
      return cost;
  }
  return cost;
}

LayerCost layer_cost(const ModelGraph& graph, std::size_t index) {
  const auto& layer = graph.layer(index);
  const auto& out = graph.output_shape(index);
  std::vector<TensorShape> in;
  in.reserve(graph.producers(index).size());
  for (auto p : graph.producers(index)) in.push_back(graph.output_shape(p));

  switch (layer.kind) {
    case LayerKind::kConv:
      return conv_cost(in.at(0), layer.conv(), out);
    case LayerKind::kFc:
      return fc_cost(in.at(0).element_count(), layer.fc().out_features);
    default:
      return nonconv_cost(layer.kind, in, out, layer.in_place);
  }
}

std::string_view to_string(ConvFamily family) {
  switch (family) {
    case ConvFamily::kStandard:
      return "standard";
    case ConvFamily::kPointwise:
      return "pointwise";
    case ConvFamily::kGroup:
      return "group";
    case ConvFamily::kDepthwise:
      return "depthwise";
  }
  return "unknown";
}

ReuseCharacteristics closed_form_ai(ConvFamily family, std::int64_t in_channels,
                                    std::int64_t out_channels, std::int64_t kernel,
                                    std::int64_t fmap, std::int64_t groups) {
  if (in_channels < 1 || out_channels < 1 || kernel < 1 || fmap < 1 || groups < 1) {
    throw ArgumentError("closed_form_ai: all parameters must be >= 1");
  }
  const double m = static_cast<double>(in_channels);
  const double n = static_cast<double>(out_channels);
  const double k2 = static_cast<double>(kernel) * static_cast<double>(kernel);
  const double s2 = static_cast<double>(fmap) * static_cast<double>(fmap);
  const double g = static_cast<double>(groups);

  ReuseCharacteristics r;
  r.weight_reuse = s2;
  switch (family) {
    case ConvFamily::kStandard:
      if (groups != 1) throw ArgumentError("closed_form_ai: standard convolution needs g = 1");
      r.arithmetic_intensity = m * n * k2 * s2 / (m * n * k2 + (m + n) * s2);
      r.activation_reuse = m * n / (m + n) * k2;
      break;
    case ConvFamily::kPointwise:
      if (groups != 1) throw ArgumentError("closed_form_ai: pointwise convolution needs g = 1");
      r.arithmetic_intensity = m * n * s2 / (m * n + (m + n) * s2);
      r.activation_reuse = m * n / (m + n);
      break;
    case ConvFamily::kGroup:
      if (in_channels % groups != 0 || out_channels % groups != 0) {
        throw ArgumentError("closed_form_ai: g must divide M and N");
      }
      r.arithmetic_intensity = m * n * k2 * s2 / (m * n * k2 + g * (m + n) * s2);
      r.activation_reuse = m * n / (m + n) * k2 / g;
      break;
    case ConvFamily::kDepthwise:
      if (in_channels != out_channels || (groups != 1 && groups != in_channels)) {
        throw ArgumentError("closed_form_ai: depthwise convolution needs M = N (and g = M)");
      }
      r.arithmetic_intensity = m * k2 * s2 / (m * k2 + (m + m) * s2);
      r.activation_reuse = m / (m + m) * k2;
      break;
  }
  return r;
}

}  // namespace dnnreuse
