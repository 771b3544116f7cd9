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

#include "dnnreuse/measurement.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "dnnreuse/csv.h"
#include "dnnreuse/format.h"

namespace dnnreuse {

namespace {

constexpr double kStableFraction = 0.95;

std::vector<std::string> split_header(std::string_view header) {
  return parse_csv(header).header();
}

std::string key_of(const MeasurementRecord& r) {
  return r.model + "," + r.device + ",B=" + std::to_string(r.batch);
}

}  // namespace

void validate(const MeasurementRecord& r) {
  const auto key = key_of(r);
  if (r.model.empty()) throw InputError("measurement with empty model name");
  if (r.device.empty()) throw InputError(key + ": empty device name");
  if (r.batch < 1) throw InputError(key + ": non-positive batch");
  if (!(r.p_avg_w > 0.0) || !std::isfinite(r.p_avg_w)) {
    throw InputError(key + ": non-positive power " + format_exact(r.p_avg_w));
  }
  if (!(r.i_t_ms > 0.0) || !std::isfinite(r.i_t_ms)) {
    throw InputError(key + ": non-positive inference time " + format_exact(r.i_t_ms));
  }
  if (r.input_h < 1 || r.input_w < 1) throw InputError(key + ": non-positive input size");
  if (r.macs && (!(*r.macs > 0.0) || !std::isfinite(*r.macs))) {
    throw InputError(key + ": non-positive MAC count");
  }
}

std::vector<MeasurementRecord> load_measurements(std::string_view csv, const std::string& source) {
  const auto table = parse_csv(csv, source);
  const auto expected = split_header(kMeasurementHeader);
  for (const auto& name : expected) table.column(name);
  for (const auto& name : table.header()) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      throw InputError(source + ": unknown column '" + name + "'");
    }
  }
  const auto c_model = table.column("model");
  const auto c_device = table.column("device");
  const auto c_batch = table.column("batch");
  const auto c_p = table.column("p_avg_w");
  const auto c_t = table.column("i_t_ms");
  const auto c_h = table.column("input_h");
  const auto c_w = table.column("input_w");
  const auto c_macs = table.column("macs");

  std::vector<MeasurementRecord> records;
  std::set<std::tuple<std::string, std::string, std::int64_t>> seen;
  for (const auto& row : table.rows()) {
    const auto where = table.where(row);
    const auto& f = row.fields;
    try {
      MeasurementRecord r;
      r.model = f[c_model];
      r.device = f[c_device];
      r.batch = parse_integer(f[c_batch], "batch");
      r.p_avg_w = parse_number(f[c_p], "p_avg_w");
      r.i_t_ms = parse_number(f[c_t], "i_t_ms");
      r.input_h = parse_integer(f[c_h], "input_h");
      r.input_w = parse_integer(f[c_w], "input_w");
      if (!f[c_macs].empty()) r.macs = parse_number(f[c_macs], "macs");
      validate(r);
      if (!seen.emplace(r.model, r.device, r.batch).second) {
        throw InputError("duplicate key (" + key_of(r) + ")");
      }
      records.push_back(std::move(r));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return records;
}

std::string serialize_measurements(std::span<const MeasurementRecord> records) {
  std::ostringstream out;
  out << kMeasurementHeader << '\n';
  for (const auto& r : records) {
    out << r.model << ',' << r.device << ',' << r.batch << ',' << format_exact(r.p_avg_w) << ','
        << format_exact(r.i_t_ms) << ',' << r.input_h << ',' << r.input_w << ',';
    if (r.macs) out << format_exact(*r.macs);
    out << '\n';
  }
  return out.str();
}

std::vector<PowerSample> load_power_samples(std::string_view csv, const std::string& source) {
  const auto table = parse_csv(csv, source);
  const auto c_t = table.column("t_ms");
  const auto c_w = table.column("watts");
  std::vector<PowerSample> samples;
  for (const auto& row : table.rows()) {
    try {
      PowerSample s{parse_number(row.fields[c_t], "t_ms"), parse_number(row.fields[c_w], "watts")};
      if (s.watts < 0.0) throw InputError("negative power reading");
      samples.push_back(s);
    } catch (const InputError& e) {
      throw InputError(table.where(row) + ": " + e.what());
    }
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const PowerSample& a, const PowerSample& b) { return a.t_ms < b.t_ms; });
  return samples;
}

double average_power(std::span<const double> watts, double idle_w, bool subtract_idle) {
  if (watts.empty()) throw ArgumentError("average_power needs at least one sample");
  const std::size_t n = watts.size();
  const std::size_t tail = std::max<std::size_t>(1, (n + 3) / 4);
  const double tail_mean =
      std::accumulate(watts.end() - static_cast<std::ptrdiff_t>(tail), watts.end(), 0.0) /
      static_cast<double>(tail);
  const double threshold = kStableFraction * tail_mean;
  std::size_t start = 0;
  while (start < n && watts[start] < threshold) ++start;
  // The tail itself always contains a sample >= 95% of its own mean.
  const double mean = std::accumulate(watts.begin() + static_cast<std::ptrdiff_t>(start),
                                      watts.end(), 0.0) /
                      static_cast<double>(n - start);
  return subtract_idle ? mean - idle_w : mean;
}

double average_power(std::span<const PowerSample> samples, double idle_w, bool subtract_idle) {
  std::vector<double> watts;
  watts.reserve(samples.size());
  for (const auto& s : samples) watts.push_back(s.watts);
  return average_power(watts, idle_w, subtract_idle);
}

double epp(const MeasurementRecord& record, bool per_frame) {
  if (record.pixels() < 1) throw InputError(key_of(record) + ": zero pixels");
  double e = record.p_avg_w * (record.i_t_ms / 1000.0) / static_cast<double>(record.pixels());
  if (per_frame) e /= static_cast<double>(record.batch);
  return e;
}

double energy_efficiency(const MeasurementRecord& record) {
  if (!record.macs) throw InputError(key_of(record) + ": MAC count absent");
  const double joules = record.p_avg_w * (record.i_t_ms / 1000.0);
  return static_cast<double>(record.batch) * *record.macs / joules;
}

EnergyMetrics energy_metrics(const MeasurementRecord& record, bool per_frame) {
  return {epp(record, per_frame), energy_efficiency(record)};
}

}  // namespace dnnreuse
