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

// Power and latency observations, and the energy metrics built from them.
//
//   EPP        = P_avg * I_t / pixels         (joules per pixel)
//   efficiency = B * M_c / (P_avg * I_t)      (MACs per joule)

#ifndef DNNREUSE_MEASUREMENT_H_
#define DNNREUSE_MEASUREMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnnreuse/error.h"

namespace dnnreuse {

inline constexpr std::string_view kMeasurementHeader =
    "model,device,batch,p_avg_w,i_t_ms,input_h,input_w,macs";
inline constexpr std::string_view kPowerSampleHeader = "t_ms,watts";

struct MeasurementRecord {
  std::string model;
  std::string device;
  std::int64_t batch = 1;
  double p_avg_w = 0.0;  // watts
  double i_t_ms = 0.0;   // average forward-pass time, milliseconds
  std::int64_t input_h = 0;
  std::int64_t input_w = 0;
  std::optional<double> macs;  // per sample, per forward pass

  std::int64_t pixels() const { return input_h * input_w; }
  bool operator==(const MeasurementRecord&) const = default;
};

struct EnergyMetrics {
  double epp = 0.0;         // J / pixel
  double efficiency = 0.0;  // MACs / J
};

// Throws InputError on a missing or unknown column, a non-positive value or
// a repeated (model, device, batch) key. `source` prefixes diagnostics.
std::vector<MeasurementRecord> load_measurements(std::string_view csv,
                                                 const std::string& source = "<measurements>");
std::string serialize_measurements(std::span<const MeasurementRecord> records);

// Validates one record against the invariants load_measurements enforces.
void validate(const MeasurementRecord& record);

struct PowerSample {
  double t_ms = 0.0;
  double watts = 0.0;
};

std::vector<PowerSample> load_power_samples(std::string_view csv,
                                            const std::string& source = "<power>");

// Drops the warm-up ramp (everything before the first sample reaching 95% of
// the mean of the final quarter of the series) and averages the remainder.
// Throws ArgumentError on an empty series.
double average_power(std::span<const double> watts, double idle_w = 0.0,
                     bool subtract_idle = false);
double average_power(std::span<const PowerSample> samples, double idle_w = 0.0,
                     bool subtract_idle = false);

// Literal form divides by one frame's pixels; per_frame also divides by B.
double epp(const MeasurementRecord& record, bool per_frame = false);

// Throws InputError when record.macs is absent.
double energy_efficiency(const MeasurementRecord& record);

EnergyMetrics energy_metrics(const MeasurementRecord& record, bool per_frame = false);

}  // namespace dnnreuse

#endif  // DNNREUSE_MEASUREMENT_H_
