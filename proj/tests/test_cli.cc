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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "dnnreuse/csv.h"
#include "json.hpp"
#include "test_support.h"

namespace dnnreuse {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> all_models() {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(testing::data_path("models"))) {
    paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("dnnreuse_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

// Value of `key=` inside a "# a=..,b=.." trailer line.
double trailer_value(const std::string& text, const std::string& key) {
  const auto at = text.find(key + "=");
  EXPECT_NE(at, std::string::npos) << key;
  return std::stod(text.substr(at + key.size() + 1));
}

TEST(Cli, AnalyzeAlexNet) {
  const auto r = run({"analyze", testing::model_path("alexnet")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 1u);
  const auto& f = t.rows()[0].fields;
  EXPECT_EQ(f[t.column("model")], "AlexNet");
  EXPECT_NEAR(parse_number(f[t.column("macs")], "macs"), 7.244e8, 1e6);
  EXPECT_EQ(f[t.column("case")], "ActivationsScarce");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AnalyzeJsonArrayOfTwo) {
  const auto r = run({"analyze", testing::model_path("alexnet"), testing::model_path("vgg16"),
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["model"], "VGG-16");
  EXPECT_EQ(j[1]["macs"].get<std::uint64_t>(), 15470264320u);
}

TEST(Cli, AnalyzeBadModelNamesLayer) {
  const auto path = temp_file("bad.json", R"({"name": "bad", "input": {"channels": 3, "h": 8, "w": 8}, "layers": [
    {"name": "data", "kind": "input"},
    {"name": "c1", "kind": "conv", "inputs": ["nowhere"], "out_channels": 4,
     "kernel_h": 3, "kernel_w": 3}
  ]})");
  const auto r = run({"analyze", path});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("c1"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileAndBadFlags) {
  EXPECT_EQ(run({"analyze", "/nonexistent.json"}).code, cli::kExitInput);
  EXPECT_EQ(run({"analyze", testing::model_path("alexnet"), "--alpha", "1.5"}).code,
            cli::kExitInput);
  EXPECT_EQ(run({"nosuchcommand"}).code, cli::kExitInput);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LayersVggMedian) {
  const auto r = run({"layers", testing::model_path("vgg16")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(trailer_value(r.out, "# median"), 560.0, 56.0);
}

TEST(Cli, LayersSingleConv) {
  const auto path = temp_file("one.json", R"({"name": "one", "input": {"channels": 2, "h": 4, "w": 4}, "layers": [
    {"name": "data", "kind": "input"},
    {"name": "c1", "kind": "conv", "inputs": ["data"], "out_channels": 3,
     "kernel_h": 1, "kernel_w": 1}
  ]})");
  const auto r = run({"layers", path});
  ASSERT_EQ(r.code, 0) << r.err;
  // macs 96, weights 6, ofmap 48.
  EXPECT_NEAR(trailer_value(r.out, "# median"), 96.0 / 54.0, 1e-4);
  EXPECT_NEAR(trailer_value(r.out, "# variance"), 0.0, 1e-12);
}

TEST(Cli, LayersWithoutMacsIsDegenerate) {
  const auto path = temp_file("nomac.json", R"({"name": "nomac", "input": {"channels": 2, "h": 4, "w": 4}, "layers": [
    {"name": "data", "kind": "input"},
    {"name": "p", "kind": "pool", "inputs": ["data"], "kernel_h": 2, "kernel_w": 2,
     "stride_h": 2, "stride_w": 2}
  ]})");
  EXPECT_EQ(run({"layers", path}).code, cli::kExitDegenerate);
}

std::vector<std::string> calibrate_args(const std::string& device, const std::string& batch) {
  std::vector<std::string> a{"calibrate", "--profiles", testing::data_path("reuse_figures.csv"),
                             "--measurements", testing::data_path("measurements.csv"),
                             "--device", device, "--batch", batch, "--models"};
  for (auto& m : all_models()) a.push_back(m);
  return a;
}

TEST(Cli, CalibrateBundled) {
  const auto joined = (std::filesystem::temp_directory_path() / "dnnreuse_joined.csv").string();
  auto args = calibrate_args("P4000", "4");
  args.insert(args.end(), {"--joined", joined});
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(trailer_value(r.out, "# selected_alpha"), 0.80, 0.05 + 1e-9);
  EXPECT_EQ(trailer_value(r.out, "n"), 25);

  const auto s = run({"stats", "--csv", joined, "--x", "di", "--y", "efficiency"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto t = parse_csv(s.out);
  EXPECT_NEAR(parse_number(t.rows()[0].fields[t.column("r_p")], "r_p"), 0.85, 0.05);

  const auto same = run({"stats", "--csv", joined, "--x", "di", "--y", "di"});
  ASSERT_EQ(same.code, 0) << same.err;
  const auto ts = parse_csv(same.out);
  EXPECT_EQ(parse_number(ts.rows()[0].fields[ts.column("r_p")], "r_p"), 1.0);
}

TEST(Cli, CalibrateCoarseGrid) {
  auto args = calibrate_args("P100", "1");
  args.insert(args.end(), {"--step", "0.5"});
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  EXPECT_EQ(t.size(), 3u);
}

TEST(Cli, CalibrateReportsOrphans) {
  const auto meas = temp_file("orphan.csv",
                              "model,device,batch,p_avg_w,i_t_ms,input_h,input_w,macs\n"
                              "AlexNet,P100,1,37.0,2.21,224,224,\n"
                              "NotANet,P100,1,40.0,3.0,224,224,1000\n");
  const auto r = run({"calibrate", "--profiles", testing::data_path("reuse_figures.csv"),
                      "--measurements", meas, "--models", testing::model_path("alexnet")});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("NotANet"), std::string::npos) << r.err;
}

TEST(Cli, RooflineClassifiesByMetric) {
  const auto hw = testing::data_path("hardware/p100.json");
  const auto csv = testing::data_path("reuse_figures.csv");
  auto bound_of = [](const std::string& out, const std::string& model) {
    const auto t = parse_csv(out);
    for (const auto& row : t.rows()) {
      if (row.fields[t.column("label")] == model) return row.fields[t.column("bound")];
    }
    return std::string("missing");
  };
  const auto ai = run({"roofline", "--hw", hw, "--metric", "ai", csv});
  ASSERT_EQ(ai.code, 0) << ai.err;
  EXPECT_EQ(bound_of(ai.out, "AlexNet"), "MemoryBound");
  const auto di = run({"roofline", "--hw", hw, "--metric", "di", csv});
  ASSERT_EQ(di.code, 0) << di.err;
  EXPECT_EQ(bound_of(di.out, "AlexNet"), "ComputeBound");
  EXPECT_EQ(run({"roofline", "--hw", "/nonexistent.json", csv}).code, cli::kExitInput);
}

TEST(Cli, StatsFromR) {
  const auto r = run({"stats", "--r", "0.85", "--n", "25"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = parse_csv(r.out);
  const auto& f = t.rows()[0].fields;
  EXPECT_NEAR(parse_number(f[t.column("ci95_lower")], "l"), 0.68, 0.01);
  EXPECT_NEAR(parse_number(f[t.column("ci99_upper")], "u"), 0.95, 0.01);
  EXPECT_EQ(run({"stats", "--r", "0.5", "--n", "3"}).code, cli::kExitInput);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"analyze"};
  for (auto& m : all_models()) args.push_back(m);
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_csv(a.out).size(), 25u);
}

}  // namespace
}  // namespace dnnreuse
