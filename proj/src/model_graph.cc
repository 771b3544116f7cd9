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

#include "dnnreuse/model_graph.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace dnnreuse {

namespace {

using nlohmann::json;

constexpr std::string_view kKindNames[] = {"input", "conv",      "fc",  "pool",
                                           "relu",  "batchnorm", "add", "concat"};

std::string squote(std::string_view s) { return "'" + std::string(s) + "'"; }

// nlohmann reports the 1-based count of bytes read; the offending character
// is the last one read.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  const std::size_t target = byte == 0 ? 0 : std::min(byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < target; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::int64_t read_int(const json& obj, std::string_view key, const std::string& layer,
                      std::optional<std::int64_t> fallback, std::int64_t minimum) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    throw ModelError(ModelErrorKind::kInvalidLayer,
                     "missing required field " + squote(key), layer);
  }
  if (!it->is_number_integer()) {
    throw ModelError(ModelErrorKind::kInvalidLayer,
                     "field " + squote(key) + " must be an integer", layer);
  }
  const auto value = it->get<std::int64_t>();
  if (value < minimum) {
    throw ModelError(ModelErrorKind::kInvalidLayer,
                     "field " + squote(key) + " must be >= " + std::to_string(minimum), layer);
  }
  return value;
}

Window2d read_window(const json& obj, const std::string& layer) {
  Window2d w;
  w.kernel_h = read_int(obj, "kernel_h", layer, std::nullopt, 1);
  w.kernel_w = read_int(obj, "kernel_w", layer, std::nullopt, 1);
  w.stride_h = read_int(obj, "stride_h", layer, 1, 1);
  w.stride_w = read_int(obj, "stride_w", layer, 1, 1);
  w.pad_h = read_int(obj, "pad_h", layer, 0, 0);
  w.pad_w = read_int(obj, "pad_w", layer, 0, 0);
  return w;
}

void check_allowed_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                        const std::string& layer) {
  for (const auto& item : obj.items()) {
    const bool known = std::find(allowed.begin(), allowed.end(), item.key()) != allowed.end();
    if (!known) {
      throw ModelError(ModelErrorKind::kInvalidLayer, "unexpected field " + squote(item.key()),
                       layer);
    }
  }
}

LayerSpec read_layer(const json& obj, std::size_t index) {
  const std::string where = "layers[" + std::to_string(index) + "]";
  if (!obj.is_object()) {
    throw ModelError(ModelErrorKind::kInvalidLayer, where + " must be an object");
  }
  auto name_it = obj.find("name");
  if (name_it == obj.end() || !name_it->is_string() || name_it->get<std::string>().empty()) {
    throw ModelError(ModelErrorKind::kInvalidLayer, where + " needs a non-empty string 'name'");
  }
  LayerSpec spec;
  spec.name = name_it->get<std::string>();

  auto kind_it = obj.find("kind");
  if (kind_it == obj.end() || !kind_it->is_string()) {
    throw ModelError(ModelErrorKind::kInvalidLayer, "missing string field 'kind'", spec.name);
  }
  const auto kind_text = kind_it->get<std::string>();
  const auto kind = parse_layer_kind(kind_text);
  if (!kind) {
    throw ModelError(ModelErrorKind::kUnknownKind, "unknown layer kind " + squote(kind_text),
                     spec.name);
  }
  spec.kind = *kind;

  if (auto in = obj.find("inputs"); in != obj.end()) {
    if (!in->is_array()) {
      throw ModelError(ModelErrorKind::kInvalidLayer, "'inputs' must be an array", spec.name);
    }
    for (const auto& producer : *in) {
      if (!producer.is_string()) {
        throw ModelError(ModelErrorKind::kInvalidLayer, "'inputs' entries must be strings",
                         spec.name);
      }
      spec.inputs.push_back(producer.get<std::string>());
    }
  }
  if (auto note = obj.find("note"); note != obj.end()) {
    if (!note->is_string()) {
      throw ModelError(ModelErrorKind::kInvalidLayer, "'note' must be a string", spec.name);
    }
    spec.note = note->get<std::string>();
  }

  switch (spec.kind) {
    case LayerKind::kConv: {
      check_allowed_keys(obj,
                         {"name", "kind", "inputs", "note", "out_channels", "kernel_h",
                          "kernel_w", "stride_h", "stride_w", "pad_h", "pad_w", "groups"},
                         spec.name);
      ConvParams conv;
      conv.out_channels = read_int(obj, "out_channels", spec.name, std::nullopt, 1);
      conv.window = read_window(obj, spec.name);
      conv.groups = read_int(obj, "groups", spec.name, 1, 1);
      spec.params = conv;
      break;
    }
    case LayerKind::kFc: {
      check_allowed_keys(obj, {"name", "kind", "inputs", "note", "out_features"}, spec.name);
      spec.params = FcParams{read_int(obj, "out_features", spec.name, std::nullopt, 1)};
      break;
    }
    case LayerKind::kPool: {
      check_allowed_keys(obj,
                         {"name", "kind", "inputs", "note", "kernel_h", "kernel_w", "stride_h",
                          "stride_w", "pad_h", "pad_w"},
                         spec.name);
      spec.params = PoolParams{read_window(obj, spec.name)};
      break;
    }
    case LayerKind::kRelu:
    case LayerKind::kBatchNorm: {
      check_allowed_keys(obj, {"name", "kind", "inputs", "note", "in_place"}, spec.name);
      if (auto ip = obj.find("in_place"); ip != obj.end()) {
        if (!ip->is_boolean()) {
          throw ModelError(ModelErrorKind::kInvalidLayer, "'in_place' must be a boolean",
                           spec.name);
        }
        spec.in_place = ip->get<bool>();
      }
      break;
    }
    case LayerKind::kInput:
    case LayerKind::kAdd:
    case LayerKind::kConcat:
      check_allowed_keys(obj, {"name", "kind", "inputs", "note"}, spec.name);
      break;
  }
  return spec;
}

json window_json(const Window2d& w) {
  return json{{"kernel_h", w.kernel_h}, {"kernel_w", w.kernel_w}, {"stride_h", w.stride_h},
              {"stride_w", w.stride_w}, {"pad_h", w.pad_h},       {"pad_w", w.pad_w}};
}

}  // namespace

std::string to_string(const TensorShape& shape) {
  return std::to_string(shape.channels) + "x" + std::to_string(shape.height) + "x" +
         std::to_string(shape.width);
}

std::string_view to_string(LayerKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<LayerKind> parse_layer_kind(std::string_view text) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == text) return static_cast<LayerKind>(i);
  }
  return std::nullopt;
}

bool LayerSpec::produces_tensor() const {
  if (kind == LayerKind::kRelu || kind == LayerKind::kBatchNorm) return !in_place;
  return true;
}

std::string_view to_string(ModelErrorKind kind) {
  switch (kind) {
    case ModelErrorKind::kSyntax:
      return "syntax error";
    case ModelErrorKind::kUnknownKind:
      return "unknown layer kind";
    case ModelErrorKind::kDuplicateName:
      return "duplicate layer name";
    case ModelErrorKind::kDanglingInput:
      return "dangling input reference";
    case ModelErrorKind::kCycle:
      return "cycle detected";
    case ModelErrorKind::kInvalidLayer:
      return "invalid layer";
    case ModelErrorKind::kInvalidInput:
      return "invalid input declaration";
  }
  return "model error";
}

ModelError::ModelError(ModelErrorKind kind, const std::string& message, std::string layer,
                       std::size_t line, std::size_t column)
    : InputError(message),
      kind_(kind),
      layer_(std::move(layer)),
      line_(line),
      column_(column) {}

ShapeError::ShapeError(const std::string& message, std::string layer)
    : InputError(message), layer_(std::move(layer)) {}

ModelGraph::ModelGraph(std::string name, TensorShape input_shape, std::vector<LayerSpec> layers)
    : name_(std::move(name)), input_shape_(input_shape), layers_(std::move(layers)) {
  if (!input_shape_.valid()) {
    throw ModelError(ModelErrorKind::kInvalidInput,
                     "input shape " + to_string(input_shape_) + " has a dimension < 1");
  }
  if (layers_.empty()) {
    throw ModelError(ModelErrorKind::kInvalidInput, "model has no layers");
  }

  std::unordered_map<std::string_view, std::size_t> index;
  std::optional<std::size_t> input;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& layer = layers_[i];
    if (!index.emplace(layer.name, i).second) {
      throw ModelError(ModelErrorKind::kDuplicateName, "duplicate layer name " + squote(layer.name),
                       layer.name);
    }
    if (layer.kind == LayerKind::kInput) {
      if (input) {
        throw ModelError(ModelErrorKind::kInvalidInput,
                         "more than one input layer (" + squote(layers_[*input].name) + " and " +
                             squote(layer.name) + ")",
                         layer.name);
      }
      if (!layer.inputs.empty()) {
        throw ModelError(ModelErrorKind::kInvalidInput, "input layer must not have inputs",
                         layer.name);
      }
      input = i;
    }
    if (layer.kind == LayerKind::kConv) {
      const auto& conv = std::get<ConvParams>(layer.params);
      if (conv.groups < 1 || conv.out_channels % conv.groups != 0) {
        throw ModelError(ModelErrorKind::kInvalidLayer,
                         "groups " + std::to_string(conv.groups) +
                             " must divide out_channels " + std::to_string(conv.out_channels),
                         layer.name);
      }
    }
    const bool wants_params =
        layer.kind == LayerKind::kConv || layer.kind == LayerKind::kFc ||
        layer.kind == LayerKind::kPool;
    const bool has_matching_params =
        (layer.kind == LayerKind::kConv && std::holds_alternative<ConvParams>(layer.params)) ||
        (layer.kind == LayerKind::kFc && std::holds_alternative<FcParams>(layer.params)) ||
        (layer.kind == LayerKind::kPool && std::holds_alternative<PoolParams>(layer.params)) ||
        (!wants_params && std::holds_alternative<std::monostate>(layer.params));
    if (!has_matching_params) {
      throw ModelError(ModelErrorKind::kInvalidLayer, "parameters do not match layer kind",
                       layer.name);
    }
  }
  if (!input) {
    throw ModelError(ModelErrorKind::kInvalidInput, "model has no layer of kind 'input'");
  }
  input_index_ = *input;

  producers_.assign(layers_.size(), {});
  consumers_.assign(layers_.size(), {});
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    for (const auto& producer : layers_[i].inputs) {
      auto it = index.find(producer);
      if (it == index.end()) {
        throw ModelError(ModelErrorKind::kDanglingInput,
                         "input " + squote(producer) + " does not name a layer", layers_[i].name);
      }
      producers_[i].push_back(it->second);
      consumers_[it->second].push_back(i);
    }
  }

  // Kahn's algorithm; the smallest ready declaration index runs first.
  std::vector<std::size_t> pending(layers_.size());
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    pending[i] = producers_[i].size();
    if (pending[i] == 0) ready.push(i);
  }
  order_.reserve(layers_.size());
  while (!ready.empty()) {
    const auto next = ready.top();
    ready.pop();
    order_.push_back(next);
    for (auto consumer : consumers_[next]) {
      if (--pending[consumer] == 0) ready.push(consumer);
    }
  }
  if (order_.size() != layers_.size()) {
    std::string members;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      if (pending[i] > 0) members += (members.empty() ? "" : ", ") + squote(layers_[i].name);
    }
    std::string first;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      if (pending[i] > 0) {
        first = layers_[i].name;
        break;
      }
    }
    throw ModelError(ModelErrorKind::kCycle, "cycle detected among layers " + members, first);
  }
}

std::size_t ModelGraph::edge_count() const {
  std::size_t edges = 0;
  for (const auto& p : producers_) edges += p.size();
  return edges;
}

std::optional<std::size_t> ModelGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].name == name) return i;
  }
  return std::nullopt;
}

bool ModelGraph::shape_annotated() const {
  return std::all_of(layers_.begin(), layers_.end(),
                     [](const LayerSpec& l) { return l.output_shape.has_value(); });
}

const TensorShape& ModelGraph::output_shape(std::size_t index) const {
  const auto& shape = layers_.at(index).output_shape;
  if (!shape) {
    throw ShapeError("graph is not shape-annotated; run infer_shapes first", layers_[index].name);
  }
  return *shape;
}

bool ModelGraph::operator==(const ModelGraph& other) const {
  return name_ == other.name_ && input_shape_ == other.input_shape_ && layers_ == other.layers_;
}

ModelGraph parse_model(std::string_view text, std::string default_name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ModelError(ModelErrorKind::kSyntax, what, {}, line, column);
  }
  if (!doc.is_object()) {
    throw ModelError(ModelErrorKind::kSyntax, "model document must be a JSON object", {}, 1, 1);
  }
  for (const auto& item : doc.items()) {
    if (item.key() != "name" && item.key() != "input" && item.key() != "layers" &&
        item.key() != "note") {
      throw ModelError(ModelErrorKind::kInvalidInput,
                       "unexpected top-level field " + squote(item.key()));
    }
  }

  std::string name = std::move(default_name);
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) {
      throw ModelError(ModelErrorKind::kInvalidInput, "'name' must be a string");
    }
    name = it->get<std::string>();
  }

  auto input_it = doc.find("input");
  if (input_it == doc.end() || !input_it->is_object()) {
    throw ModelError(ModelErrorKind::kInvalidInput, "missing object field 'input'");
  }
  TensorShape input_shape;
  try {
    check_allowed_keys(*input_it, {"channels", "h", "w"}, "input");
    input_shape.channels = read_int(*input_it, "channels", "input", std::nullopt, 1);
    input_shape.height = read_int(*input_it, "h", "input", std::nullopt, 1);
    input_shape.width = read_int(*input_it, "w", "input", std::nullopt, 1);
  } catch (const ModelError& e) {
    throw ModelError(ModelErrorKind::kInvalidInput, std::string("input: ") + e.what());
  }

  auto layers_it = doc.find("layers");
  if (layers_it == doc.end() || !layers_it->is_array()) {
    throw ModelError(ModelErrorKind::kInvalidInput, "missing array field 'layers'");
  }
  std::vector<LayerSpec> layers;
  layers.reserve(layers_it->size());
  std::size_t index = 0;
  for (const auto& layer : *layers_it) layers.push_back(read_layer(layer, index++));
  return ModelGraph(std::move(name), input_shape, std::move(layers));
}

std::string serialize_model(const ModelGraph& graph) {
  json doc;
  doc["name"] = graph.name();
  doc["input"] = json{{"channels", graph.input_shape().channels},
                      {"h", graph.input_shape().height},
                      {"w", graph.input_shape().width}};
  json layers = json::array();
  for (const auto& layer : graph.layers()) {
    json obj{{"name", layer.name}, {"kind", std::string(to_string(layer.kind))}};
    if (!layer.inputs.empty()) obj["inputs"] = layer.inputs;
    if (!layer.note.empty()) obj["note"] = layer.note;
    switch (layer.kind) {
      case LayerKind::kConv: {
        const auto& conv = layer.conv();
        obj["out_channels"] = conv.out_channels;
        obj.update(window_json(conv.window));
        obj["groups"] = conv.groups;
        break;
      }
      case LayerKind::kFc:
        obj["out_features"] = layer.fc().out_features;
        break;
      case LayerKind::kPool:
        obj.update(window_json(layer.pool().window));
        break;
      case LayerKind::kRelu:
      case LayerKind::kBatchNorm:
        obj["in_place"] = layer.in_place;
        break;
      default:
        break;
    }
    layers.push_back(std::move(obj));
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2) + "\n";
}

std::optional<std::int64_t> window_output_extent(std::int64_t in, std::int64_t kernel,
                                                 std::int64_t stride, std::int64_t pad) {
  const std::int64_t span = in + 2 * pad - kernel;
  if (span < 0 || stride < 1) return std::nullopt;
  return span / stride + 1;
}

namespace {

TensorShape window_shape(const TensorShape& in, const Window2d& w, std::int64_t channels,
                         const std::string& layer) {
  const auto h = window_output_extent(in.height, w.kernel_h, w.stride_h, w.pad_h);
  const auto wd = window_output_extent(in.width, w.kernel_w, w.stride_w, w.pad_w);
  if (!h || !wd) {
    throw ShapeError("window " + std::to_string(w.kernel_h) + "x" + std::to_string(w.kernel_w) +
                         " does not fit input " + to_string(in) + " (non-positive output dimension)",
                     layer);
  }
  return TensorShape{channels, *h, *wd};
}

void require_arity(const LayerSpec& layer, std::size_t min, std::size_t max) {
  const auto n = layer.inputs.size();
  if (n < min || n > max) {
    std::string expected = min == max ? std::to_string(min) : "at least " + std::to_string(min);
    throw ShapeError(std::string(to_string(layer.kind)) + " layer expects " + expected +
                         " input(s), got " + std::to_string(n),
                     layer.name);
  }
}

}  // namespace

ModelGraph infer_shapes(const ModelGraph& graph) {
  ModelGraph out = graph;
  constexpr std::size_t kMany = static_cast<std::size_t>(-1);
  for (auto index : out.order_) {
    auto& layer = out.layers_[index];
    std::vector<TensorShape> in;
    for (auto p : out.producers_[index]) in.push_back(*out.layers_[p].output_shape);

    switch (layer.kind) {
      case LayerKind::kInput:
        layer.output_shape = out.input_shape_;
        break;
      case LayerKind::kConv: {
        require_arity(layer, 1, 1);
        const auto& conv = layer.conv();
        if (in[0].channels % conv.groups != 0) {
          throw ShapeError("groups " + std::to_string(conv.groups) +
                               " does not divide input channels " +
                               std::to_string(in[0].channels),
                           layer.name);
        }
        layer.output_shape = window_shape(in[0], conv.window, conv.out_channels, layer.name);
        break;
      }
      case LayerKind::kPool:
        require_arity(layer, 1, 1);
        layer.output_shape = window_shape(in[0], layer.pool().window, in[0].channels, layer.name);
        break;
      case LayerKind::kFc:
        require_arity(layer, 1, 1);
        layer.output_shape = TensorShape{layer.fc().out_features, 1, 1};
        break;
      case LayerKind::kRelu:
      case LayerKind::kBatchNorm:
        require_arity(layer, 1, 1);
        layer.output_shape = in[0];
        break;
      case LayerKind::kAdd:
        require_arity(layer, 2, kMany);
        for (std::size_t i = 1; i < in.size(); ++i) {
          if (!(in[i] == in[0])) {
            throw ShapeError("add operands differ in shape: " + to_string(in[0]) + " vs " +
                                 to_string(in[i]),
                             layer.name);
          }
        }
        layer.output_shape = in[0];
        break;
      case LayerKind::kConcat: {
        require_arity(layer, 1, kMany);
        TensorShape shape = in[0];
        for (std::size_t i = 1; i < in.size(); ++i) {
          if (in[i].height != in[0].height || in[i].width != in[0].width) {
            throw ShapeError("concat operands differ in spatial size: " + to_string(in[0]) +
                                 " vs " + to_string(in[i]),
                             layer.name);
          }
          shape.channels += in[i].channels;
        }
        layer.output_shape = shape;
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> topo_order(const ModelGraph& graph) { return graph.execution_order(); }

}  // namespace dnnreuse
