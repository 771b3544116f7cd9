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

#include "dnnreuse/di_metric.h"

#include <cmath>
#include <string>

namespace dnnreuse {

namespace {

constexpr double kBoundTolerance = 1e-9;
constexpr double kTightTolerance = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

void check_ratios(const ReuseRatios& r) {
  if (!std::isfinite(r.weight_reuse) || !std::isfinite(r.activation_reuse) ||
      r.weight_reuse < 0.0 || r.activation_reuse < 0.0) {
    throw ArgumentError("reuse ratios must be finite and non-negative");
  }
}

}  // namespace

ReuseRatios reuse_ratios(const NetworkProfile& profile) {
  if (!profile.weight_reuse || !profile.activation_reuse) {
    throw DegenerateError("profile '" + profile.model +
                          "' has undefined reuse (W or A is zero)");
  }
  return {*profile.weight_reuse, *profile.activation_reuse};
}

double weighted_intensity(const ReuseRatios& reuse, double alpha) {
  check_alpha(alpha);
  check_ratios(reuse);
  return (alpha * reuse.activation_reuse + (1.0 - alpha) * reuse.weight_reuse) / 4.0;
}

double weighted_intensity(const NetworkProfile& profile, double alpha) {
  return weighted_intensity(reuse_ratios(profile), alpha);
}

double ai_from_reuse(double weight_reuse, double activation_reuse) {
  if (!(weight_reuse > 0.0) || !(activation_reuse > 0.0)) {
    throw DegenerateError("ai_from_reuse needs both reuse ratios > 0");
  }
  return weight_reuse * activation_reuse / (weight_reuse + activation_reuse);
}

namespace {

double disparity_of(double ai_c, double di) {
  if (!(ai_c > 0.0)) throw DegenerateError("disparity is undefined for AI_c = 0");
  return 100.0 * (ai_c - di) / ai_c;
}

}  // namespace

double disparity(const NetworkProfile& profile, double alpha) {
  return disparity_of(profile.ai_c, weighted_intensity(profile, alpha));
}

double disparity(const ReuseRatios& reuse, double alpha) {
  return disparity_of(ai_from_reuse(reuse.weight_reuse, reuse.activation_reuse),
                      weighted_intensity(reuse, alpha));
}

double disparity_closed_form(double a_over_w) {
  if (!(a_over_w > 0.0)) throw DegenerateError("A/W must be > 0");
  return 75.0 - 20.0 / a_over_w - 5.0 * a_over_w;
}

std::string_view to_string(ReuseCase c) {
  switch (c) {
    case ReuseCase::kActivationsScarce:
      return "ActivationsScarce";
    case ReuseCase::kBalanced:
      return "Balanced";
    case ReuseCase::kActivationsDominant:
      return "ActivationsDominant";
  }
  return "Unknown";
}

ReuseCase classify_case(double a_over_w, const CaseThresholds& thresholds) {
  if (!(thresholds.low > 0.0) || !(thresholds.high >= thresholds.low)) {
    throw ArgumentError("case thresholds must satisfy 0 < low <= high");
  }
  if (!(a_over_w > 0.0)) throw DegenerateError("A/W must be > 0 to classify");
  if (a_over_w < thresholds.low) return ReuseCase::kActivationsScarce;
  if (a_over_w > thresholds.high) return ReuseCase::kActivationsDominant;
  return ReuseCase::kBalanced;
}

ReuseCase classify_case(const NetworkProfile& profile, const CaseThresholds& thresholds) {
  if (!profile.a_over_w) {
    throw DegenerateError("profile '" + profile.model + "' has no weights; A/W undefined");
  }
  return classify_case(*profile.a_over_w, thresholds);
}

ReuseBound reuse_bound(const ReuseRatios& reuse, double ai_c) {
  check_ratios(reuse);
  ReuseBound b;
  b.bound = (reuse.activation_reuse + reuse.weight_reuse) / 4.0;
  b.slack = b.bound - ai_c;
  b.holds = b.slack >= -kBoundTolerance * b.bound;
  b.tight = std::abs(b.slack) <= kTightTolerance * b.bound;
  return b;
}

ReuseBound reuse_bound(const NetworkProfile& profile) {
  return reuse_bound(reuse_ratios(profile), profile.ai_c);
}

double automl_metric(double macs, double di, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw ArgumentError("k must lie in [0, 1), got " + std::to_string(k));
  }
  if (!(di > 0.0)) throw DegenerateError("automl metric needs DI > 0");
  return macs * std::pow(1.0 / di, k);
}

DerivedMetrics derive_metrics(const NetworkProfile& profile, double alpha,
                              const CaseThresholds& thresholds) {
  DerivedMetrics m;
  m.alpha = alpha;
  m.di = weighted_intensity(profile, alpha);
  m.d_f = disparity(profile, alpha);
  m.case_tag = classify_case(profile, thresholds);
  return m;
}

}  // namespace dnnreuse
