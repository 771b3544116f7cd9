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

#include "dnnreuse/statistics.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

namespace dnnreuse {

double median(std::span<const double> values) {
  if (values.empty()) throw DegenerateError("median of an empty series");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double population_variance(std::span<const double> values) {
  if (values.empty()) throw DegenerateError("variance of an empty series");
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size());
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ArgumentError("correlation needs equal-length series (" + std::to_string(xs.size()) +
                        " vs " + std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 3) throw ArgumentError("correlation needs at least 3 points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateError("correlation of a constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    // Positions i..j (0-based) hold ranks i+1..j+1.
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ArgumentError("correlation needs equal-length series");
  }
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

std::vector<double> alpha_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw ArgumentError("alpha step must lie in (0, 1], got " + std::to_string(step));
  }
  constexpr double kSnap = 1e-9;
  std::vector<double> grid;
  for (std::int64_t i = 0;; ++i) {
    const double alpha = static_cast<double>(i) * step;
    if (alpha >= 1.0 - kSnap) break;
    grid.push_back(alpha);
  }
  grid.push_back(1.0);
  return grid;
}

namespace {

void check_sweep_inputs(std::span<const ReuseRatios> reuse, std::span<const double> efficiency) {
  if (reuse.size() != efficiency.size()) {
    throw ArgumentError("alpha sweep needs one efficiency per network (" +
                        std::to_string(reuse.size()) + " vs " +
                        std::to_string(efficiency.size()) + ")");
  }
  if (reuse.size() < 3) throw ArgumentError("alpha sweep needs at least 3 networks");
}

CalibrationPoint sweep_point(std::span<const ReuseRatios> reuse,
                             std::span<const double> efficiency, double alpha) {
  std::vector<double> di(reuse.size());
  for (std::size_t i = 0; i < reuse.size(); ++i) di[i] = weighted_intensity(reuse[i], alpha);
  return {alpha, pearson(di, efficiency), spearman(di, efficiency)};
}

}  // namespace

CalibrationCurve alpha_sweep(std::span<const ReuseRatios> reuse,
                             std::span<const double> efficiency, double step) {
  check_sweep_inputs(reuse, efficiency);
  const auto grid = alpha_grid(step);
  const auto n = static_cast<std::int64_t>(grid.size());
  CalibrationCurve curve;
  curve.grid.resize(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      curve.grid[i] = sweep_point(reuse, efficiency, grid[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return curve;
}

namespace serial {

CalibrationCurve alpha_sweep(std::span<const ReuseRatios> reuse,
                             std::span<const double> efficiency, double step) {
  check_sweep_inputs(reuse, efficiency);
  CalibrationCurve curve;
  for (double alpha : alpha_grid(step)) curve.grid.push_back(sweep_point(reuse, efficiency, alpha));
  return curve;
}

}  // namespace serial

double select_alpha(const CalibrationCurve& curve, double epsilon) {
  if (curve.grid.empty()) throw ArgumentError("empty calibration curve");
  if (!(epsilon >= 0.0)) throw ArgumentError("plateau epsilon must be >= 0");
  const auto& g = curve.grid;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (g[i + 1].r_p - g[i].r_p < epsilon) return g[i].alpha;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i].r_p > g[best].r_p) best = i;
  }
  return g[best].alpha;
}

CalibrationCurve calibrate(std::span<const ReuseRatios> reuse, std::span<const double> efficiency,
                           double step, double epsilon) {
  auto curve = alpha_sweep(reuse, efficiency, step);
  curve.selected_alpha = select_alpha(curve, epsilon);
  curve.epsilon = epsilon;
  curve.rule = "first alpha where r_p gains < epsilon over the next grid step; else argmax r_p";
  return curve;
}

double z_critical(ConfidenceLevel level) { return level == ConfidenceLevel::k95 ? 1.96 : 2.58; }

double level_value(ConfidenceLevel level) { return level == ConfidenceLevel::k95 ? 0.95 : 0.99; }

ConfidenceLevel parse_confidence_level(double level) {
  if (std::abs(level - 0.95) < 1e-12) return ConfidenceLevel::k95;
  if (std::abs(level - 0.99) < 1e-12) return ConfidenceLevel::k99;
  throw ArgumentError("confidence level must be 0.95 or 0.99, got " + std::to_string(level));
}

double fisher_z(double r) {
  if (!(std::abs(r) < 1.0)) throw DegenerateError("Fisher Z is infinite for |r| >= 1");
  return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

double inverse_fisher_z(double z) {
  const double e = std::exp(2.0 * z);
  if (std::isinf(e)) return 1.0;
  return (e - 1.0) / (e + 1.0);
}

double fisher_z_width(std::int64_t n, ConfidenceLevel level) {
  if (n < 4) throw ArgumentError("Fisher interval needs n >= 4, got " + std::to_string(n));
  return 2.0 * z_critical(level) / std::sqrt(static_cast<double>(n - 3));
}

ConfidenceInterval fisher_ci(double r, std::int64_t n, ConfidenceLevel level) {
  if (n < 4) throw ArgumentError("Fisher interval needs n >= 4, got " + std::to_string(n));
  const double z = fisher_z(r);
  const double half = z_critical(level) / std::sqrt(static_cast<double>(n - 3));
  ConfidenceInterval ci;
  ci.r = r;
  ci.n = n;
  ci.level = level;
  ci.lower = inverse_fisher_z(z - half);
  ci.upper = inverse_fisher_z(z + half);
  return ci;
}

std::int64_t min_sample_size(ConfidenceLevel level, double max_z_width) {
  if (!(max_z_width > 0.0)) throw ArgumentError("interval width must be > 0");
  const double ratio = 2.0 * z_critical(level) / max_z_width;
  auto n = static_cast<std::int64_t>(std::ceil(3.0 + ratio * ratio));
  n = std::max<std::int64_t>(n, 4);
  // Settle rounding at the boundary against the defining inequality.
  while (n > 4 && fisher_z_width(n - 1, level) <= max_z_width) --n;
  while (fisher_z_width(n, level) > max_z_width) ++n;
  return n;
}

}  // namespace dnnreuse
