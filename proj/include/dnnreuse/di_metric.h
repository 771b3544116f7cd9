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

// Data-type-aware weighted intensity (DI) and the metrics derived from it.
//
// Conventional intensity weighs weights and activations equally:
//
//   AI_c = M_c / (W + A) <= (M_c/A + M_c/W) / 4
//
// DI replaces the equal weighting of the right-hand side with a reuse
// coefficient alpha in [0, 1]:
//
//   DI = (alpha * M_c/A + (1 - alpha) * M_c/W) / 4
//
// and alpha = 0.8 is the calibrated default. All intensities are MACs per
// data element; byte conversion is the roofline module's concern.

#ifndef DNNREUSE_DI_METRIC_H_
#define DNNREUSE_DI_METRIC_H_

#include <optional>
#include <string_view>

#include "dnnreuse/network_profile.h"

namespace dnnreuse {

inline constexpr double kDefaultAlpha = 0.8;

// The two reuse ratios DI is built from.
struct ReuseRatios {
  double weight_reuse = 0.0;      // M_c / W
  double activation_reuse = 0.0;  // M_c / A

  double a_over_w() const { return weight_reuse / activation_reuse; }
};

// Throws DegenerateError when either ratio is undefined (W or A is zero).
ReuseRatios reuse_ratios(const NetworkProfile& profile);

// Throws ArgumentError for alpha outside [0, 1] or non-finite ratios.
double weighted_intensity(const ReuseRatios& reuse, double alpha = kDefaultAlpha);
double weighted_intensity(const NetworkProfile& profile, double alpha = kDefaultAlpha);

// AI_c recovered from the two ratios: wr * ar / (wr + ar). M_c cancels.
double ai_from_reuse(double weight_reuse, double activation_reuse);

// Relative disparity d_f = 100 * (AI_c - DI) / AI_c, in percent.
double disparity(const NetworkProfile& profile, double alpha = kDefaultAlpha);
double disparity(const ReuseRatios& reuse, double alpha = kDefaultAlpha);

// d_f at alpha = 0.8 written in terms of A/W alone:
// 75 - 20 * (W/A) - 5 * (A/W).
double disparity_closed_form(double a_over_w);

enum class ReuseCase { kActivationsScarce, kBalanced, kActivationsDominant };

std::string_view to_string(ReuseCase c);

struct CaseThresholds {
  double low = 1.0 / 3.0;
  double high = 3.0;
};

// A/W < low: activations scarce; A/W > high: activations dominant.
ReuseCase classify_case(double a_over_w, const CaseThresholds& thresholds = {});
ReuseCase classify_case(const NetworkProfile& profile, const CaseThresholds& thresholds = {});

struct ReuseBound {
  double bound = 0.0;  // (M_c/A + M_c/W) / 4
  double slack = 0.0;  // bound - AI_c
  bool holds = true;   // slack >= -1e-9 * bound
  bool tight = false;  // slack within 1e-12 * bound of zero, i.e. W == A
};

ReuseBound reuse_bound(const ReuseRatios& reuse, double ai_c);
ReuseBound reuse_bound(const NetworkProfile& profile);

// M_c * (1 / DI)^k with k in [0, 1). Throws DegenerateError when DI <= 0.
double automl_metric(double macs, double di, double k);

struct DerivedMetrics {
  double alpha = kDefaultAlpha;
  double di = 0.0;
  double d_f = 0.0;
  ReuseCase case_tag = ReuseCase::kBalanced;
};

DerivedMetrics derive_metrics(const NetworkProfile& profile, double alpha = kDefaultAlpha,
                              const CaseThresholds& thresholds = {});

}  // namespace dnnreuse

#endif  // DNNREUSE_DI_METRIC_H_
