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

#ifndef DNNREUSE_ROOFLINE_H_
#define DNNREUSE_ROOFLINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnnreuse/error.h"

namespace dnnreuse {

struct HardwareSpec {
  std::string name;
  double peak_throughput = 0.0;  // operations / s
  double peak_bandwidth = 0.0;   // bytes / s

  // Compute-to-memory ratio, the knee of the roofline.
  double cmr() const { return peak_throughput / peak_bandwidth; }
};

// {"name": ..., "peak_flops": ..., "peak_bandwidth_bytes_per_s": ...}.
// The ratio is always derived, never read.
HardwareSpec parse_hardware(std::string_view json, const std::string& source = "<hardware>");
HardwareSpec load_hardware(const std::string& path);

enum class IntensityMode {
  kRaw,        // the MACs/element number is compared to cmr as is
  kConverted,  // scaled to FLOPs/byte first
};

std::string_view to_string(IntensityMode mode);
IntensityMode parse_intensity_mode(std::string_view text);

struct IntensityUnits {
  IntensityMode mode = IntensityMode::kRaw;
  double bytes_per_element = 4.0;
  double flops_per_mac = 2.0;
};

enum class BoundClass { kComputeBound, kMemoryBound };

std::string_view to_string(BoundClass c);

// Intensity expressed in the hardware's ops/byte units. Throws ArgumentError
// for a non-positive intensity.
double hardware_intensity(double intensity, const IntensityUnits& units = {});

BoundClass classify(const HardwareSpec& hw, double intensity, const IntensityUnits& units = {});

// min(peak, intensity * bandwidth); exactly the peak when compute-bound.
double attainable(const HardwareSpec& hw, double intensity, const IntensityUnits& units = {});

struct LabeledIntensity {
  std::string label;
  double intensity = 0.0;
  std::optional<double> measured_ops;
};

struct RooflineRow {
  std::string label;
  double intensity = 0.0;  // in the caller's units
  double attainable_ops = 0.0;
  std::optional<BoundClass> bound;  // empty for envelope samples
  std::optional<double> measured_ops;
};

inline constexpr int kEnvelopeSamples = 64;
inline constexpr std::string_view kSlopeLabel = "envelope:slope";
inline constexpr std::string_view kRoofLabel = "envelope:roof";

// One row per point in input order, then kEnvelopeSamples log-spaced rows on
// the bandwidth slope (ending at the knee) and on the flat roof (starting at
// the knee). Throws ArgumentError on an empty point list.
std::vector<RooflineRow> roofline_points(const HardwareSpec& hw,
                                         std::span<const LabeledIntensity> points,
                                         const IntensityUnits& units = {});

inline constexpr std::string_view kRooflineHeader =
    "label,intensity,attainable_ops,bound,measured_ops";

}  // namespace dnnreuse

#endif  // DNNREUSE_ROOFLINE_H_
