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
#include <map>
#include <random>

#include "dnnreuse/di_metric.h"
#include "test_support.h"

namespace dnnreuse {
namespace {

struct Row {
  ReuseRatios reuse;
  double ai_c, di, d_f, a_over_w;
};

std::map<std::string, Row> reuse_table() {
  const auto t = read_csv_file(testing::data_path("reuse_figures.csv"));
  std::map<std::string, Row> rows;
  for (const auto& r : t.rows()) {
    auto num = [&](const char* col) { return parse_number(r.fields[t.column(col)], col); };
    rows[r.fields[0]] = {{num("weight_reuse"), num("activation_reuse")}, num("ai_c"), num("di"),
                         num("d_f"), num("a_over_w")};
  }
  return rows;
}

TEST(WeightedIntensity, PrintedRows) {
  const auto rows = reuse_table();
  ASSERT_EQ(rows.size(), 25u);
  EXPECT_NEAR(weighted_intensity(rows.at("AlexNet").reuse), 72.89, 0.01);
  EXPECT_NEAR(weighted_intensity(rows.at("VGG-16").reuse), 113.02, 0.01);
}

TEST(WeightedIntensity, Endpoints) {
  const ReuseRatios r{12.0, 340.0};
  EXPECT_DOUBLE_EQ(weighted_intensity(r, 1.0), 85.0);
  EXPECT_DOUBLE_EQ(weighted_intensity(r, 0.0), 3.0);
  EXPECT_NEAR(weighted_intensity(r, 0.8), 0.2 * 340.0 + 0.05 * 12.0, 1e-12);
  EXPECT_THROW(weighted_intensity(r, 1.01), ArgumentError);
  EXPECT_THROW(weighted_intensity(r, -0.01), ArgumentError);
}

TEST(WeightedIntensity, DirectionFollowsDominantReuse) {
  const auto rows = reuse_table();
  const auto& alex = rows.at("AlexNet").reuse;
  const auto& mb = rows.at("MobileNet-V1").reuse;
  EXPECT_LT(weighted_intensity(alex, 0.3), weighted_intensity(alex, 0.6));
  EXPECT_GT(weighted_intensity(mb, 0.3), weighted_intensity(mb, 0.6));
}

TEST(AiFromReuse, Examples) {
  EXPECT_NEAR(ai_from_reuse(11.85, 361.50), 11.47, 0.01);
  EXPECT_NEAR(ai_from_reuse(124.80, 12.36), 11.25, 0.01);
  EXPECT_DOUBLE_EQ(ai_from_reuse(7.0, 7.0), 3.5);
  EXPECT_THROW(ai_from_reuse(0.0, 1.0), DegenerateError);
}

TEST(Disparity, Examples) {
  const auto rows = reuse_table();
  EXPECT_NEAR(disparity(rows.at("AlexNet").reuse), -535.16, 0.5);
  EXPECT_NEAR(disparity(rows.at("NiN").reuse), 32.60, 0.1);
  EXPECT_NEAR(disparity(ReuseRatios{9.0, 9.0}), 50.0, 1e-12);
}

TEST(Disparity, ClosedFormOnRandomProfiles) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double w = std::pow(10.0, u(rng)) * 1e6;
    const double a = std::pow(10.0, u(rng)) * 1e6;
    const double m = std::pow(10.0, u(rng)) * 1e9;
    const ReuseRatios r{m / w, m / a};
    const double want = disparity_closed_form(a / w);
    EXPECT_NEAR(disparity(r), want, 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST(ClassifyCase, Exemplars) {
  const auto rows = reuse_table();
  EXPECT_EQ(classify_case(rows.at("AlexNet").a_over_w), ReuseCase::kActivationsScarce);
  EXPECT_EQ(classify_case(rows.at("ResNet-50").a_over_w), ReuseCase::kBalanced);
  EXPECT_EQ(classify_case(rows.at("1.0-G-SqNxt-23").a_over_w), ReuseCase::kActivationsDominant);
  EXPECT_EQ(classify_case(rows.at("MobileNet-V1").a_over_w), ReuseCase::kActivationsDominant);
  EXPECT_EQ(classify_case(1.0 / 3.0), ReuseCase::kBalanced);
  EXPECT_EQ(classify_case(3.0), ReuseCase::kBalanced);
  EXPECT_EQ(classify_case(2.0, {0.5, 1.5}), ReuseCase::kActivationsDominant);
  EXPECT_THROW(classify_case(1.0, {2.0, 1.0}), ArgumentError);
}

TEST(ClassifyCase, ScaleInvariant) {
  const auto p = make_profile("p", 1000, 30, 70, 0);
  const auto q = make_profile("q", 7000, 210, 490, 0);
  EXPECT_EQ(classify_case(p), classify_case(q));
}

TEST(ReuseBound, AlexNetSlack) {
  const auto b = reuse_bound(ReuseRatios{11.85, 361.50}, 11.48);
  EXPECT_NEAR(b.slack, 81.8575, 1e-9);
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.tight);
}

TEST(ReuseBound, EqualityIffWeightsEqualActivations) {
  const auto eq = reuse_bound(make_profile("eq", 1000, 40, 40, 0));
  EXPECT_TRUE(eq.tight);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto w = rng() % 100000 + 1;
    const auto a = rng() % 100000 + 1;
    const auto b = reuse_bound(make_profile("r", rng() % 1000000000 + 1, w, a, 0));
    EXPECT_GE(b.slack, -1e-9 * b.bound);
    EXPECT_EQ(b.tight, w == a);
  }
}

TEST(AutomlMetric, Examples) {
  EXPECT_DOUBLE_EQ(automl_metric(5e8, 37.0, 0.0), 5e8);
  EXPECT_NEAR(automl_metric(1e9, 100.0, 0.5), 1e8, 1e-3);
  const double alex = automl_metric(1.0, 72.89, 0.5);
  const double mb = automl_metric(1.0, 12.43, 0.5);
  EXPECT_NEAR(mb / alex, std::sqrt(72.89 / 12.43), 1e-12);
  EXPECT_NEAR(mb / alex, 2.42, 0.01);
  EXPECT_THROW(automl_metric(1.0, 1.0, 1.0), ArgumentError);
  EXPECT_THROW(automl_metric(1.0, 0.0, 0.5), DegenerateError);
}

TEST(DeriveMetrics, Composes) {
  const auto p = make_profile("p", 1000, 100, 10, 0);
  const auto m = derive_metrics(p);
  EXPECT_DOUBLE_EQ(m.di, weighted_intensity(p));
  EXPECT_DOUBLE_EQ(m.d_f, disparity(p));
  EXPECT_EQ(m.case_tag, ReuseCase::kActivationsScarce);
  EXPECT_NEAR(m.d_f, 100.0 * (p.ai_c - m.di) / p.ai_c, 1e-12);
}

}  // namespace
}  // namespace dnnreuse
