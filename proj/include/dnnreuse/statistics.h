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

#ifndef DNNREUSE_STATISTICS_H_
#define DNNREUSE_STATISTICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnnreuse/di_metric.h"

namespace dnnreuse {

// Mean of the two central values for even lengths. Throws on empty input.
double median(std::span<const double> values);
// Divides by n.
double population_variance(std::span<const double> values);

// Product-moment correlation. Throws ArgumentError on length mismatch or
// fewer than 3 points, DegenerateError when either series is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson on average ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

struct CalibrationPoint {
  double alpha = 0.0;
  double r_p = 0.0;
  double r_s = 0.0;
};

struct CalibrationCurve {
  std::vector<CalibrationPoint> grid;  // alpha strictly increasing over [0, 1]
  double selected_alpha = 0.0;
  double epsilon = 0.0;
  std::string rule;
};

inline constexpr double kDefaultAlphaStep = 0.05;
inline constexpr double kDefaultPlateauEpsilon = 0.01;

// 0, step, 2*step, ... and always 1.0 as the last point.
std::vector<double> alpha_grid(double step = kDefaultAlphaStep);

// Correlates DI(alpha) of each network with its measured efficiency at every
// grid point. Grid points are evaluated in parallel with OpenMP; the result
// is identical to serial::alpha_sweep. The selection fields are left for
// select_alpha.
CalibrationCurve alpha_sweep(std::span<const ReuseRatios> reuse,
                             std::span<const double> efficiency,
                             double step = kDefaultAlphaStep);

// Smallest grid alpha whose step to the next point gains less than epsilon
// in r_p. When r_p keeps climbing through alpha = 1, returns the argmax of
// r_p (smallest alpha among ties).
double select_alpha(const CalibrationCurve& curve, double epsilon = kDefaultPlateauEpsilon);

// alpha_sweep followed by select_alpha, with the selection recorded.
CalibrationCurve calibrate(std::span<const ReuseRatios> reuse, std::span<const double> efficiency,
                           double step = kDefaultAlphaStep,
                           double epsilon = kDefaultPlateauEpsilon);

enum class ConfidenceLevel { k95, k99 };

// The fixed two-sided normal critical values 1.96 and 2.58.
double z_critical(ConfidenceLevel level);
double level_value(ConfidenceLevel level);  // 0.95 or 0.99
ConfidenceLevel parse_confidence_level(double level);

struct ConfidenceInterval {
  double r = 0.0;
  std::int64_t n = 0;
  ConfidenceLevel level = ConfidenceLevel::k95;
  double lower = 0.0;
  double upper = 0.0;

  double width() const { return upper - lower; }
};

double fisher_z(double r);
double inverse_fisher_z(double z);

// Width of the interval in Fisher-Z space: 2 * z_crit / sqrt(n - 3).
double fisher_z_width(std::int64_t n, ConfidenceLevel level);

// Interval for the population correlation given a sample r over n pairs.
// Throws ArgumentError for n < 4 and DegenerateError for |r| >= 1.
ConfidenceInterval fisher_ci(double r, std::int64_t n, ConfidenceLevel level);

// Smallest n with fisher_z_width(n, level) <= max_z_width.
std::int64_t min_sample_size(ConfidenceLevel level = ConfidenceLevel::k95,
                             double max_z_width = 1.0);

namespace serial {

// Reference implementation of dnnreuse::alpha_sweep.
CalibrationCurve alpha_sweep(std::span<const ReuseRatios> reuse,
                             std::span<const double> efficiency,
                             double step = kDefaultAlphaStep);

}  // namespace serial

}  // namespace dnnreuse

#endif  // DNNREUSE_STATISTICS_H_
