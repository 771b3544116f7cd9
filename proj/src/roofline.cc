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

#include "dnnreuse/roofline.h"

#include <algorithm>
#include <cmath>

#include "dnnreuse/csv.h"
#include "json.hpp"

namespace dnnreuse {

HardwareSpec parse_hardware(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(source + ": hardware document must be an object");
  HardwareSpec hw;
  try {
    hw.name = doc.at("name").get<std::string>();
    hw.peak_throughput = doc.at("peak_flops").get<double>();
    hw.peak_bandwidth = doc.at("peak_bandwidth_bytes_per_s").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(source + ": " + e.what());
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "peak_flops" && key != "peak_bandwidth_bytes_per_s" &&
        key != "note") {
      throw InputError(source + ": unknown field '" + key + "'");
    }
  }
  if (hw.name.empty()) throw InputError(source + ": empty hardware name");
  if (!(hw.peak_throughput > 0.0) || !std::isfinite(hw.peak_throughput) ||
      !(hw.peak_bandwidth > 0.0) || !std::isfinite(hw.peak_bandwidth)) {
    throw InputError(source + ": peak throughput and bandwidth must be positive");
  }
  return hw;
}

HardwareSpec load_hardware(const std::string& path) {
  return parse_hardware(read_text_file(path), path);
}

std::string_view to_string(IntensityMode mode) {
  return mode == IntensityMode::kRaw ? "raw" : "converted";
}

IntensityMode parse_intensity_mode(std::string_view text) {
  if (text == "raw") return IntensityMode::kRaw;
  if (text == "converted") return IntensityMode::kConverted;
  throw ArgumentError("intensity mode must be raw or converted, got '" + std::string(text) + "'");
}

std::string_view to_string(BoundClass c) {
  return c == BoundClass::kComputeBound ? "ComputeBound" : "MemoryBound";
}

double hardware_intensity(double intensity, const IntensityUnits& units) {
  if (!(intensity > 0.0) || !std::isfinite(intensity)) {
    throw ArgumentError("intensity must be positive and finite");
  }
  if (units.mode == IntensityMode::kRaw) return intensity;
  if (!(units.bytes_per_element > 0.0) || !(units.flops_per_mac > 0.0)) {
    throw ArgumentError("bytes_per_element and flops_per_mac must be positive");
  }
  return intensity * units.flops_per_mac / units.bytes_per_element;
}

BoundClass classify(const HardwareSpec& hw, double intensity, const IntensityUnits& units) {
  return hardware_intensity(intensity, units) >= hw.cmr() ? BoundClass::kComputeBound
                                                          : BoundClass::kMemoryBound;
}

double attainable(const HardwareSpec& hw, double intensity, const IntensityUnits& units) {
  if (classify(hw, intensity, units) == BoundClass::kComputeBound) return hw.peak_throughput;
  return std::min(hw.peak_throughput, hardware_intensity(intensity, units) * hw.peak_bandwidth);
}

namespace {

// Caller-unit intensity whose hardware intensity is the knee.
double knee_intensity(const HardwareSpec& hw, const IntensityUnits& units) {
  return hw.cmr() / hardware_intensity(1.0, units);
}

std::vector<double> log_space(double lo, double hi, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    xs[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

}  // namespace

std::vector<RooflineRow> roofline_points(const HardwareSpec& hw,
                                         std::span<const LabeledIntensity> points,
                                         const IntensityUnits& units) {
  if (points.empty()) throw ArgumentError("roofline needs at least one labeled point");
  std::vector<RooflineRow> rows;
  double lo = knee_intensity(hw, units);
  double hi = lo;
  for (const auto& p : points) {
    rows.push_back({p.label, p.intensity, attainable(hw, p.intensity, units),
                    classify(hw, p.intensity, units), p.measured_ops});
    lo = std::min(lo, p.intensity);
    hi = std::max(hi, p.intensity);
  }
  const double knee = knee_intensity(hw, units);
  lo /= 10.0;
  hi *= 10.0;
  for (double x : log_space(lo, knee, kEnvelopeSamples)) {
    // The last slope sample sits on the knee and carries the roof height.
    const double y = x == knee ? hw.peak_throughput : hardware_intensity(x, units) * hw.peak_bandwidth;
    rows.push_back({std::string(kSlopeLabel), x, y, std::nullopt, std::nullopt});
  }
  for (double x : log_space(knee, hi, kEnvelopeSamples)) {
    rows.push_back({std::string(kRoofLabel), x, hw.peak_throughput, std::nullopt, std::nullopt});
  }
  return rows;
}

}  // namespace dnnreuse
