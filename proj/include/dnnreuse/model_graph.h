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

// Declarative layer graphs: parsing, validation, shape inference and
// execution order.
//
// A model document is JSON:
//
//   {
//     "name": "tiny",                                  (optional)
//     "input": {"channels": 3, "h": 224, "w": 224},
//     "layers": [
//       {"name": "data", "kind": "input"},
//       {"name": "conv1", "kind": "conv", "inputs": ["data"],
//        "out_channels": 64, "kernel_h": 3, "kernel_w": 3,
//        "stride_h": 1, "stride_w": 1, "pad_h": 1, "pad_w": 1, "groups": 1},
//       {"name": "relu1", "kind": "relu", "inputs": ["conv1"]}
//     ]
//   }
//
// Pool layers take the same window fields as conv (kernel_*, stride_*,
// pad_*). fc layers take "out_features". relu and batchnorm accept an
// optional boolean "in_place" (default true). Any layer may carry a free-form
// "note" string. stride defaults to 1, pad to 0 and groups to 1.

#ifndef DNNREUSE_MODEL_GRAPH_H_
#define DNNREUSE_MODEL_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dnnreuse/error.h"

namespace dnnreuse {

struct TensorShape {
  std::int64_t channels = 1;
  std::int64_t height = 1;
  std::int64_t width = 1;

  std::int64_t element_count() const { return channels * height * width; }
  bool valid() const { return channels >= 1 && height >= 1 && width >= 1; }

  bool operator==(const TensorShape&) const = default;
};

std::string to_string(const TensorShape& shape);

enum class LayerKind { kInput, kConv, kFc, kPool, kRelu, kBatchNorm, kAdd, kConcat };

std::string_view to_string(LayerKind kind);
std::optional<LayerKind> parse_layer_kind(std::string_view text);

// Sliding-window geometry shared by conv and pool layers.
struct Window2d {
  std::int64_t kernel_h = 1;
  std::int64_t kernel_w = 1;
  std::int64_t stride_h = 1;
  std::int64_t stride_w = 1;
  std::int64_t pad_h = 0;
  std::int64_t pad_w = 0;

  bool operator==(const Window2d&) const = default;
};

struct ConvParams {
  std::int64_t out_channels = 1;
  Window2d window;
  std::int64_t groups = 1;

  bool operator==(const ConvParams&) const = default;
};

struct PoolParams {
  Window2d window;

  bool operator==(const PoolParams&) const = default;
};

struct FcParams {
  std::int64_t out_features = 1;

  bool operator==(const FcParams&) const = default;
};

using LayerParams = std::variant<std::monostate, ConvParams, FcParams, PoolParams>;

struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::kInput;
  std::vector<std::string> inputs;
  LayerParams params;
  // Only meaningful for relu and batchnorm: the output aliases the input
  // tensor, so it adds no activation storage of its own.
  bool in_place = true;
  std::string note;
  // Filled in by infer_shapes().
  std::optional<TensorShape> output_shape;

  const ConvParams& conv() const { return std::get<ConvParams>(params); }
  const FcParams& fc() const { return std::get<FcParams>(params); }
  const PoolParams& pool() const { return std::get<PoolParams>(params); }

  // True when this layer's output is a fresh tensor rather than an alias.
  bool produces_tensor() const;

  bool operator==(const LayerSpec&) const = default;
};

enum class ModelErrorKind {
  kSyntax,
  kUnknownKind,
  kDuplicateName,
  kDanglingInput,
  kCycle,
  kInvalidLayer,
  kInvalidInput,
};

std::string_view to_string(ModelErrorKind kind);

// Structural problems in a model document or graph. Syntax errors carry a
// 1-based line/column; semantic errors carry the offending layer's name.
class ModelError : public InputError {
 public:
  ModelError(ModelErrorKind kind, const std::string& message, std::string layer = {},
             std::size_t line = 0, std::size_t column = 0);

  ModelErrorKind kind() const { return kind_; }
  const std::string& layer() const { return layer_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ModelErrorKind kind_;
  std::string layer_;
  std::size_t line_;
  std::size_t column_;
};

// Shape inference failures: dimension underflow, operand mismatch, group
// divisibility against the inferred input channels, wrong operand count.
class ShapeError : public InputError {
 public:
  ShapeError(const std::string& message, std::string layer);
  const std::string& layer() const { return layer_; }

 private:
  std::string layer_;
};

// A validated, acyclic layer graph. Layers keep their declaration order;
// edges are implied by LayerSpec::inputs.
class ModelGraph {
 public:
  // Validates the layer list and throws ModelError on any structural defect.
  ModelGraph(std::string name, TensorShape input_shape, std::vector<LayerSpec> layers);

  const std::string& name() const { return name_; }
  const TensorShape& input_shape() const { return input_shape_; }
  const std::vector<LayerSpec>& layers() const { return layers_; }
  const LayerSpec& layer(std::size_t index) const { return layers_[index]; }
  std::size_t size() const { return layers_.size(); }
  std::size_t edge_count() const;

  std::optional<std::size_t> find(std::string_view name) const;
  // Producer indices of layer `index`, in the order listed in `inputs`.
  const std::vector<std::size_t>& producers(std::size_t index) const { return producers_[index]; }
  const std::vector<std::size_t>& consumers(std::size_t index) const { return consumers_[index]; }
  std::size_t input_index() const { return input_index_; }

  // True once every layer carries an output shape.
  bool shape_annotated() const;
  // Output shape of layer `index`; throws if the graph is not annotated.
  const TensorShape& output_shape(std::size_t index) const;

  // Deterministic execution order computed at construction.
  const std::vector<std::size_t>& execution_order() const { return order_; }

  bool operator==(const ModelGraph& other) const;

 private:
  friend ModelGraph infer_shapes(const ModelGraph& graph);

  std::string name_;
  TensorShape input_shape_;
  std::vector<LayerSpec> layers_;
  std::vector<std::vector<std::size_t>> producers_;
  std::vector<std::vector<std::size_t>> consumers_;
  std::vector<std::size_t> order_;
  std::size_t input_index_ = 0;
};

// Parses a JSON model document. `default_name` is used when the document has
// no "name" field. Throws ModelError.
ModelGraph parse_model(std::string_view text, std::string default_name = "model");

// Canonical JSON rendering; parse_model(serialize_model(g)) == g, ignoring
// shape annotations.
std::string serialize_model(const ModelGraph& graph);

// Returns a copy with every layer's output_shape populated. Throws ShapeError.
ModelGraph infer_shapes(const ModelGraph& graph);

// Kahn's algorithm with ties broken by declaration order. Every layer appears
// after all of its producers.
std::vector<std::size_t> topo_order(const ModelGraph& graph);

// floor((in + 2 * pad - kernel) / stride) + 1, or nullopt on underflow.
std::optional<std::int64_t> window_output_extent(std::int64_t in, std::int64_t kernel,
                                                 std::int64_t stride, std::int64_t pad);

}  // namespace dnnreuse

#endif  // DNNREUSE_MODEL_GRAPH_H_
