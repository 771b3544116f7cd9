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

#include "dnnreuse/measurement.h"
#include "test_support.h"

namespace dnnreuse {
namespace {

const std::string kHeader = std::string(kMeasurementHeader) + "\n";

MeasurementRecord alexnet_p100_b4() {
  return load_measurements(kHeader + "AlexNet,P100,4,50.8,2.92,224,224,\n").at(0);
}

TEST(LoadMeasurements, BlankMacsIsAbsent) {
  const auto r = alexnet_p100_b4();
  EXPECT_EQ(r.model, "AlexNet");
  EXPECT_EQ(r.device, "P100");
  EXPECT_EQ(r.batch, 4);
  EXPECT_DOUBLE_EQ(r.p_avg_w, 50.8);
  EXPECT_DOUBLE_EQ(r.i_t_ms, 2.92);
  EXPECT_EQ(r.pixels(), 224 * 224);
  EXPECT_FALSE(r.macs.has_value());
}

TEST(LoadMeasurements, Rejections) {
  EXPECT_THROW(load_measurements(kHeader + "A,P100,1,0,1,2,2,\n"), InputError);
  EXPECT_THROW(load_measurements(kHeader + "A,P100,1,3,-1,2,2,\n"), InputError);
  EXPECT_THROW(load_measurements(kHeader + "A,P100,0,3,1,2,2,\n"), InputError);
  EXPECT_THROW(load_measurements(kHeader + "A,P100,1,3,1,2,2,\nA,P100,1,4,1,2,2,\n"),
               InputError);
  EXPECT_THROW(load_measurements("model,device,batch,p_avg_w,i_t_ms,input_h,input_w\n"),
               InputError);
  EXPECT_THROW(load_measurements(kHeader + "A,P100,1,x,1,2,2,\n"), InputError);
  // Same model on another batch is a distinct key.
  EXPECT_EQ(load_measurements(kHeader + "A,P100,1,3,1,2,2,\nA,P100,4,4,1,2,2,\n").size(), 2u);
}

TEST(LoadMeasurements, DiagnosticNamesTheLine) {
  try {
    load_measurements(kHeader + "A,P100,1,3,1,2,2,\nB,P100,1,0,1,2,2,\n", "m.csv");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("m.csv:3"), std::string::npos) << e.what();
  }
}

TEST(LoadMeasurements, BundledFileHasHundredRecords) {
  const auto recs = load_measurements(
      read_text_file(testing::data_path("measurements.csv")));
  EXPECT_EQ(recs.size(), 100u);
}

TEST(LoadMeasurements, RoundTrip) {
  auto recs = load_measurements(read_text_file(testing::data_path("measurements.csv")));
  recs[3].macs = 123456789.125;
  recs[7].macs = 1.0 / 3.0;
  const auto again = load_measurements(serialize_measurements(recs));
  EXPECT_EQ(recs, again);
}

TEST(AveragePower, DropsRamp) {
  const std::vector<double> w{31, 31, 51, 51, 51};
  EXPECT_DOUBLE_EQ(average_power(w, 31.0, false), 51.0);
  EXPECT_DOUBLE_EQ(average_power(w, 31.0, true), 20.0);
  const std::vector<double> flat(10, 40.0);
  EXPECT_DOUBLE_EQ(average_power(flat, 0.0, false), 40.0);
  EXPECT_DOUBLE_EQ(average_power(flat, 0.0, true), 40.0);
  EXPECT_THROW(average_power(std::vector<double>{}), ArgumentError);
  EXPECT_DOUBLE_EQ(average_power(std::vector<double>{7.0}), 7.0);
}

TEST(AveragePower, FromSampleCsv) {
  const auto s = load_power_samples("t_ms,watts\n200,51\n0,31\n100,31\n300,51\n400,51\n");
  EXPECT_DOUBLE_EQ(average_power(s), 51.0);
  EXPECT_THROW(load_power_samples("t_ms,watts\n0,-1\n"), InputError);
}

TEST(Epp, LiteralAndPerFrame) {
  const auto r = alexnet_p100_b4();
  const double literal = epp(r);
  EXPECT_NEAR(literal, 50.8 * 0.00292 / 50176.0, 1e-18);
  EXPECT_NEAR(literal, 2.956e-6, 0.0005e-6);
  EXPECT_NEAR(epp(r, true), 7.391e-7, 0.0005e-7);
  EXPECT_NEAR(epp(r, true) * 4 * 50176, 50.8 * 0.00292, 1e-12);
  MeasurementRecord unit{"u", "d", 1, 1.0, 1000.0, 1, 1, std::nullopt};
  EXPECT_DOUBLE_EQ(epp(unit), 1.0);
}

TEST(EnergyEfficiency, Examples) {
  MeasurementRecord r{"m", "d", 2, 10.0, 100.0, 1, 1, 1e9};
  EXPECT_DOUBLE_EQ(energy_efficiency(r), 2e9);
  auto doubled = r;
  doubled.batch = 4;
  doubled.macs = 5e8;
  EXPECT_DOUBLE_EQ(energy_efficiency(doubled), energy_efficiency(r));
  r.macs.reset();
  EXPECT_THROW(energy_efficiency(r), InputError);
}

}  // namespace
}  // namespace dnnreuse
