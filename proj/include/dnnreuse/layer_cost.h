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

// Per-layer work and data counts.
//
// Every layer is reduced to three counts: multiply-accumulates (M_c),
// learnable weights (W, biases excluded) and activations (A, ifmap + ofmap
// elements). Convolution uses a single grouped formula; standard, pointwise
// and depthwise convolution are the g = 1, 1x1 and g = M = N special cases.

#ifndef DNNREUSE_LAYER_COST_H_
#define DNNREUSE_LAYER_COST_H_

#include <cstdint>
#include <optional>
#include <span>

#include "dnnreuse/model_graph.h"

namespace dnnreuse {

struct LayerCost {
  std::uint64_t macs = 0;
  std::uint64_t weights = 0;
  std::uint64_t activations = 0;

  // M_c / W; undefined without weights.
  std::optional<double> weight_reuse() const;
  // M_c / A; undefined without activations.
  std::optional<double> activation_reuse() const;
  // M_c / (W + A); undefined when both are zero.
  std::optional<double> arithmetic_intensity() const;

  LayerCost& operator+=(const LayerCost& other);
  bool operator==(const LayerCost&) const = default;
};

// M_c = (M/g) * N * Kh * Kw * Oh * Ow, W = (M/g) * N * Kh * Kw,
// A = M * Ih * Iw + N * Oh * Ow. Throws ArgumentError when g does not divide
// M and N, or when the shapes disagree with the parameters' channel counts.
LayerCost conv_cost(const TensorShape& in, const ConvParams& conv, const TensorShape& out);

// Fully connected: M_c = W = in * out, A = in + out.
LayerCost fc_cost(std::int64_t in_elements, std::int64_t out_features);

// Layers without MACs. A counts operands plus result; in-place relu and
// batchnorm contribute no activations (the tensor belongs to its producer);
// an input layer counts its own tensor once. batchnorm carries 2*C affine
// weights.
LayerCost nonconv_cost(LayerKind kind, std::span<const TensorShape> in_shapes,
                       const TensorShape& out, bool in_place);

// Dispatches on the kind of layer `index` of a shape-annotated graph.
LayerCost layer_cost(const ModelGraph& graph, std::size_t index);

enum class ConvFamily { kStandard, kPointwise, kGroup, kDepthwise };

std::string_view to_string(ConvFamily family);

struct ReuseCharacteristics {
  double arithmetic_intensity = 0.0;
  double weight_reuse = 0.0;
  double activation_reuse = 0.0;
};

// Closed-form reuse of a square convolution (square kernel `kernel`, equal
// square ifmap/ofmap of side `fmap`). Pointwise ignores `kernel` (1x1 by
// definition). Throws ArgumentError on family/parameter mismatch.
ReuseCharacteristics closed_form_ai(ConvFamily family, std::int64_t in_channels,
                                    std::int64_t out_channels, std::int64_t kernel,
                                    std::int64_t fmap, std::int64_t groups);

}  // namespace dnnreuse

#endif  // DNNREUSE_LAYER_COST_H_
