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

#include "dnnreuse/roofline.h"
#include "test_support.h"

namespace dnnreuse {
namespace {

HardwareSpec p100() { return load_hardware(testing::data_path("hardware/p100.json")); }
HardwareSpec p4000() { return load_hardware(testing::data_path("hardware/p4000.json")); }

TEST(Hardware, DerivedRatio) {
  EXPECT_NEAR(p4000().cmr(), 21.4, 0.01);
  EXPECT_NEAR(p100().cmr(), 16.94, 0.01);
  const auto hw = p100();
  EXPECT_NEAR(hw.cmr() * hw.peak_bandwidth, hw.peak_throughput, 1e-9 * hw.peak_throughput);
}

TEST(Hardware, Rejections) {
  EXPECT_THROW(parse_hardware(R"({"name": "x", "peak_flops": 1})"), InputError);
  EXPECT_THROW(parse_hardware(R"({"name": "x", "peak_flops": -1,
                                  "peak_bandwidth_bytes_per_s": 1})"),
               InputError);
  EXPECT_THROW(parse_hardware(R"({"name": "x", "peak_flops": 1,
                                  "peak_bandwidth_bytes_per_s": 1, "cmr": 1})"),
               InputError);
  EXPECT_THROW(parse_hardware("{"), InputError);
  EXPECT_THROW(load_hardware("/nonexistent/hw.json"), InputError);
}

TEST(Classify, NamedNetworks) {
  EXPECT_EQ(classify(p100(), 11.48), BoundClass::kMemoryBound);
  EXPECT_EQ(classify(p100(), 72.89), BoundClass::kComputeBound);
  for (const auto& hw : {p100(), p4000()}) {
    EXPECT_EQ(classify(hw, 23.37), BoundClass::kComputeBound);
    EXPECT_EQ(classify(hw, 12.43), BoundClass::kMemoryBound);
  }
  EXPECT_THROW(classify(p100(), 0.0), ArgumentError);
}

TEST(Classify, ConvertedMode) {
  IntensityUnits u;
  u.mode = IntensityMode::kConverted;
  EXPECT_DOUBLE_EQ(hardware_intensity(10.0, u), 5.0);
  // 23.37 MACs/element is 11.7 FLOPs/byte, below either knee.
  EXPECT_EQ(classify(p100(), 23.37, u), BoundClass::kMemoryBound);
}

TEST(Attainable, KneeSlopeAndMonotonicity) {
  const auto hw = p4000();
  EXPECT_EQ(attainable(hw, hw.cmr()), hw.peak_throughput);
  EXPECT_NEAR(attainable(hw, hw.cmr() / 2), hw.peak_throughput / 2, 1e-3);
  EXPECT_NEAR(attainable(hw, 11.48), 11.48 * 243e9, 1.0);
  EXPECT_LT(attainable(hw, 11.48), 5.2e12);
  BoundClass prev = BoundClass::kMemoryBound;
  for (double x = 0.5; x < 100; x *= 1.07) {
    const auto c = classify(hw, x);
    EXPECT_FALSE(prev == BoundClass::kComputeBound && c == BoundClass::kMemoryBound);
    EXPECT_EQ(c == BoundClass::kComputeBound, attainable(hw, x) == hw.peak_throughput);
    prev = c;
  }
}

TEST(RooflinePoints, RowsAndContinuousEnvelope) {
  const auto hw = p100();
  const std::vector<LabeledIntensity> pts{{"a", 2.0, std::nullopt}, {"b", 50.0, 1e12}};
  const auto rows = roofline_points(hw, pts);
  ASSERT_EQ(rows.size(), 2u + 2u * kEnvelopeSamples);
  EXPECT_EQ(rows[0].label, "a");
  EXPECT_FALSE(rows[0].measured_ops.has_value());
  EXPECT_EQ(*rows[1].measured_ops, 1e12);
  EXPECT_EQ(*rows[1].bound, BoundClass::kComputeBound);
  const auto& slope_end = rows[1 + kEnvelopeSamples];
  const auto& roof_start = rows[2 + kEnvelopeSamples];
  EXPECT_EQ(slope_end.label, kSlopeLabel);
  EXPECT_EQ(roof_start.label, kRoofLabel);
  EXPECT_DOUBLE_EQ(slope_end.intensity, roof_start.intensity);
  EXPECT_DOUBLE_EQ(slope_end.attainable_ops, hw.peak_throughput);
  EXPECT_DOUBLE_EQ(roof_start.attainable_ops, hw.peak_throughput);
  EXPECT_THROW(roofline_points(hw, {}), ArgumentError);
}

}  // namespace
}  // namespace dnnreuse
