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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dnnreuse/statistics.h"

namespace dnnreuse {
namespace {

using V = std::vector<double>;

TEST(Pearson, HandComputed) {
  EXPECT_NEAR(pearson(V{1, 2, 3}, V{1, 2, 4}), 3.0 / std::sqrt(28.0 / 3.0), 1e-12);
  EXPECT_NEAR(pearson(V{1, 2, 3}, V{1, 2, 4}), 0.98198, 1e-5);
  EXPECT_DOUBLE_EQ(pearson(V{3, 1, 4, 1, 5}, V{3, 1, 4, 1, 5}), 1.0);
  EXPECT_DOUBLE_EQ(pearson(V{3, 1, 4, 1, 5}, V{-3, -1, -4, -1, -5}), -1.0);
}

TEST(Pearson, Errors) {
  EXPECT_THROW(pearson(V{1, 2, 3}, V{1, 2}), ArgumentError);
  EXPECT_THROW(pearson(V{1, 2}, V{1, 2}), ArgumentError);
  EXPECT_THROW(pearson(V{1, 1, 1}, V{1, 2, 3}), DegenerateError);
}

TEST(Pearson, AffineInvariance) {
  std::mt19937 rng(1);
  std::normal_distribution<double> n;
  V x(30), y(30);
  for (int i = 0; i < 30; ++i) {
    x[i] = n(rng);
    y[i] = x[i] + n(rng);
  }
  const double r = pearson(x, y);
  V xs = x, ys = y;
  for (auto& v : xs) v = 3.0 * v + 7.0;
  for (auto& v : ys) v = -0.5 * v + 1.0;
  EXPECT_NEAR(pearson(xs, y), r, 1e-12);
  EXPECT_NEAR(pearson(x, ys), -r, 1e-12);
  EXPECT_NEAR(spearman(xs, y), spearman(x, y), 1e-12);
}

TEST(Spearman, RankDifferenceFormula) {
  EXPECT_NEAR(spearman(V{1, 2, 3, 4}, V{1, 3, 2, 4}), 1.0 - 6.0 * 2.0 / 60.0, 1e-12);
  EXPECT_DOUBLE_EQ(spearman(V{1, 2, 3, 4}, V{1, 8, 27, 64}), 1.0);
}

TEST(Spearman, TiesUseAverageRanks) {
  EXPECT_EQ(average_ranks(V{1, 2, 2, 4}), (V{1, 2.5, 2.5, 4}));
  EXPECT_EQ(average_ranks(V{5, 5, 5}), (V{2, 2, 2}));
  EXPECT_EQ(spearman(V{1, 2, 3, 4}, V{1, 2, 2, 4}), pearson(V{1, 2, 3, 4}, V{1, 2.5, 2.5, 4}));
}

TEST(MedianVariance, Basics) {
  EXPECT_DOUBLE_EQ(median(V{3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(median(V{4, 1, 3, 2}), 2.5);
  EXPECT_DOUBLE_EQ(population_variance(V{1, 2, 3, 4}), 1.25);
  EXPECT_THROW(median(V{}), DegenerateError);
}

TEST(AlphaGrid, Steps) {
  const auto g = alpha_grid(0.05);
  ASSERT_EQ(g.size(), 21u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[16], 0.8, 1e-15);
  EXPECT_EQ(alpha_grid(0.5), (V{0.0, 0.5, 1.0}));
  EXPECT_EQ(alpha_grid(0.3).back(), 1.0);
  EXPECT_EQ(alpha_grid(0.3).size(), 5u);
  EXPECT_THROW(alpha_grid(0.0), ArgumentError);
}

TEST(AlphaSweep, PeaksWhereEfficiencyWasBuilt) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(1.0, 500.0);
  std::vector<ReuseRatios> reuse;
  V eff;
  for (int i = 0; i < 25; ++i) {
    reuse.push_back({u(rng), u(rng)});
    eff.push_back(3.0 * weighted_intensity(reuse.back(), 0.6));
  }
  const auto curve = alpha_sweep(reuse, eff);
  ASSERT_EQ(curve.grid.size(), 21u);
  for (const auto& p : curve.grid) {
    if (std::abs(p.alpha - 0.6) < 1e-9) {
      EXPECT_NEAR(p.r_p, 1.0, 1e-12);
    } else {
      EXPECT_LT(p.r_p, 1.0 - 1e-6);
    }
  }
}

TEST(AlphaSweep, EndpointsAreSingleReuseCorrelations) {
  std::vector<ReuseRatios> reuse{{1, 9}, {4, 3}, {7, 8}, {2, 2}, {9, 1}};
  V eff{5, 3, 9, 1, 4};
  const auto curve = alpha_sweep(reuse, eff, 0.25);
  V wr, ar;
  for (const auto& r : reuse) {
    wr.push_back(r.weight_reuse);
    ar.push_back(r.activation_reuse);
  }
  EXPECT_NEAR(curve.grid.front().r_p, pearson(wr, eff), 1e-12);
  EXPECT_NEAR(curve.grid.back().r_p, pearson(ar, eff), 1e-12);
  EXPECT_THROW(alpha_sweep(reuse, V{1, 2}), ArgumentError);
}

CalibrationCurve curve_of(const V& alphas, const V& rps) {
  CalibrationCurve c;
  for (std::size_t i = 0; i < alphas.size(); ++i) c.grid.push_back({alphas[i], rps[i], 0.0});
  return c;
}

TEST(SelectAlpha, Examples) {
  const V a{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  EXPECT_DOUBLE_EQ(select_alpha(curve_of(a, {0.2, 0.5, 0.7, 0.84, 0.85, 0.85}), 0.005), 0.8);
  EXPECT_DOUBLE_EQ(select_alpha(curve_of(a, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5})), 0.0);
  // Concave, peaking at 0.6: the first non-gaining step starts at the peak.
  EXPECT_DOUBLE_EQ(select_alpha(curve_of(a, {0.1, 0.4, 0.6, 0.7, 0.6, 0.4})), 0.6);
  // Still climbing at 1.0: the argmax.
  EXPECT_DOUBLE_EQ(select_alpha(curve_of(a, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6})), 1.0);
  EXPECT_DOUBLE_EQ(select_alpha(curve_of(a, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}), 0.5), 0.0);
}

TEST(FisherCi, PrintedIntervals) {
  struct Case {
    double r;
    ConfidenceLevel level;
    double lower, upper;
  };
  const Case cases[] = {
      {0.70, ConfidenceLevel::k95, 0.42, 0.86}, {0.70, ConfidenceLevel::k99, 0.31, 0.89},
      {0.85, ConfidenceLevel::k95, 0.68, 0.93}, {0.85, ConfidenceLevel::k99, 0.61, 0.95},
      {0.66, ConfidenceLevel::k95, 0.36, 0.84}, {0.66, ConfidenceLevel::k99, 0.24, 0.87},
      {0.86, ConfidenceLevel::k95, 0.70, 0.94}, {0.86, ConfidenceLevel::k99, 0.63, 0.95},
  };
  for (const auto& c : cases) {
    const auto ci = fisher_ci(c.r, 25, c.level);
    EXPECT_NEAR(ci.lower, c.lower, 0.01) << c.r;
    EXPECT_NEAR(ci.upper, c.upper, 0.01) << c.r;
    EXPECT_LE(ci.lower, c.r);
    EXPECT_GE(ci.upper, c.r);
  }
}

TEST(FisherCi, SymmetryAndShrinkage) {
  const auto zero = fisher_ci(0.0, 40, ConfidenceLevel::k95);
  EXPECT_NEAR(zero.lower, -zero.upper, 1e-15);
  double prev = 2.0;
  for (std::int64_t n = 4; n < 200; ++n) {
    const double w = fisher_ci(0.4, n, ConfidenceLevel::k99).width();
    EXPECT_LT(w, prev);
    prev = w;
  }
  EXPECT_THROW(fisher_ci(1.0, 25, ConfidenceLevel::k95), DegenerateError);
  EXPECT_THROW(fisher_ci(0.5, 3, ConfidenceLevel::k95), ArgumentError);
}

TEST(MinSampleSize, Examples) {
  EXPECT_EQ(min_sample_size(ConfidenceLevel::k95, 1.0), 19);
  EXPECT_EQ(min_sample_size(ConfidenceLevel::k95, 0.836), 25);
  EXPECT_EQ(min_sample_size(ConfidenceLevel::k99, 1.0), 30);
  EXPECT_NEAR(fisher_z_width(25, ConfidenceLevel::k95), 0.836, 0.001);
  for (double w : {0.3, 0.5, 0.77, 1.2, 2.0}) {
    const auto n = min_sample_size(ConfidenceLevel::k95, w);
    EXPECT_LE(fisher_z_width(n, ConfidenceLevel::k95), w);
    if (n > 4) {
      EXPECT_GT(fisher_z_width(n - 1, ConfidenceLevel::k95), w);
    }
  }
}

TEST(ConfidenceLevel, Parsing) {
  EXPECT_EQ(parse_confidence_level(0.95), ConfidenceLevel::k95);
  EXPECT_EQ(parse_confidence_level(0.99), ConfidenceLevel::k99);
  EXPECT_THROW(parse_confidence_level(0.9), ArgumentError);
  EXPECT_EQ(z_critical(ConfidenceLevel::k99), 2.58);
}

}  // namespace
}  // namespace dnnreuse
