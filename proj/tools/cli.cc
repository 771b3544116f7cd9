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

#include "cli.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "dnnreuse/csv.h"
#include "dnnreuse/di_metric.h"
#include "dnnreuse/format.h"
#include "dnnreuse/measurement.h"
#include "dnnreuse/model_graph.h"
#include "dnnreuse/network_profile.h"
#include "dnnreuse/roofline.h"
#include "dnnreuse/statistics.h"
#include "json.hpp"

namespace dnnreuse::cli {

namespace {

using nlohmann::json;

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_ratio(const std::optional<double>& v) { return v ? format_ratio(*v) : ""; }

// ---------------------------------------------------------------- loading

ModelGraph load_model(const std::string& path) {
  const auto text = read_text_file(path);
  const auto stem = std::filesystem::path(path).stem().string();
  try {
    return infer_shapes(parse_model(text, stem));
  } catch (const ModelError& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    std::string msg = where + ": " + e.what();
    if (!e.layer().empty()) msg += " (layer '" + e.layer() + "')";
    throw InputError(msg);
  } catch (const ShapeError& e) {
    throw InputError(path + ": layer '" + e.layer() + "': " + e.what());
  }
}

// Loads and aggregates every model, fanning out over files. Errors are
// reported for the first failing path in argument order.
std::vector<NetworkProfile> profile_models(const std::vector<std::string>& paths) {
  const auto n = static_cast<std::int64_t>(paths.size());
  std::vector<NetworkProfile> profiles(paths.size());
  std::vector<std::exception_ptr> errors(paths.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      profiles[i] = aggregate(load_model(paths[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return profiles;
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw ArgumentError("--format must be csv or json, got '" + format + "'");
  }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::vector<std::string> models;
  std::int64_t batch = 1;
  double alpha = kDefaultAlpha;
  std::string format = "csv";
  CaseThresholds thresholds;
};

void cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  check_format(o.format);
  if (o.batch < 1) throw ArgumentError("--batch must be >= 1");
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw ArgumentError("--alpha must lie in [0, 1]");
  std::vector<std::pair<NetworkProfile, DerivedMetrics>> rows;
  for (const auto& base : profile_models(o.models)) {
    auto p = batch_scale(base, o.batch);
    auto m = derive_metrics(p, o.alpha, o.thresholds);
    rows.emplace_back(std::move(p), m);
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [p, m] : rows) {
      arr.push_back({{"model", p.model},
                     {"macs", p.macs},
                     {"weights", p.weights},
                     {"activations", p.activations},
                     {"ai_c", p.ai_c},
                     {"weight_reuse", opt_json(p.weight_reuse)},
                     {"activation_reuse", opt_json(p.activation_reuse)},
                     {"a_over_w", opt_json(p.a_over_w)},
                     {"peak_concurrent", p.peak_concurrent},
                     {"batch", p.batch},
                     {"alpha", m.alpha},
                     {"di", m.di},
                     {"d_f", m.d_f},
                     {"case", std::string(to_string(m.case_tag))}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "model,macs,weights,activations,ai_c,weight_reuse,activation_reuse,a_over_w,"
         "peak_concurrent,batch,alpha,di,d_f,case\n";
  for (const auto& [p, m] : rows) {
    out << p.model << ',' << format_count(static_cast<double>(p.macs)) << ','
        << format_count(static_cast<double>(p.weights)) << ','
        << format_count(static_cast<double>(p.activations)) << ',' << format_ratio(p.ai_c) << ','
        << opt_ratio(p.weight_reuse) << ',' << opt_ratio(p.activation_reuse) << ','
        << opt_ratio(p.a_over_w) << ',' << format_count(static_cast<double>(p.peak_concurrent))
        << ',' << p.batch << ',' << format_ratio(m.alpha) << ',' << format_ratio(m.di) << ','
        << format_ratio(m.d_f) << ',' << to_string(m.case_tag) << '\n';
  }
}

// ---------------------------------------------------------------- layers

void cmd_layers(const std::string& path, const std::string& format, std::ostream& out) {
  check_format(format);
  const auto graph = load_model(path);
  const auto costs = layer_costs(graph);
  const auto stats = layerwise_ai_stats(graph);
  std::map<std::size_t, double> ai;
  for (const auto& li : stats.per_layer) ai[li.layer] = li.intensity;

  if (format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < graph.size(); ++i) {
      const auto& s = graph.output_shape(i);
      const auto it = ai.find(i);
      arr.push_back({{"layer", graph.layer(i).name},
                     {"kind", std::string(to_string(graph.layer(i).kind))},
                     {"out_c", s.channels},
                     {"out_h", s.height},
                     {"out_w", s.width},
                     {"macs", costs[i].macs},
                     {"weights", costs[i].weights},
                     {"activations", costs[i].activations},
                     {"output_elements", s.element_count()},
                     {"ai", it == ai.end() ? json(nullptr) : json(it->second)}});
    }
    out << json{{"model", graph.name()},
                {"layers", arr},
                {"median", stats.median},
                {"variance", stats.variance}}
               .dump(2)
        << '\n';
    return;
  }
  out << "layer,kind,out_c,out_h,out_w,macs,weights,activations,output_elements,ai\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& s = graph.output_shape(i);
    const auto it = ai.find(i);
    out << graph.layer(i).name << ',' << to_string(graph.layer(i).kind) << ',' << s.channels
        << ',' << s.height << ',' << s.width << ','
        << format_count(static_cast<double>(costs[i].macs)) << ','
        << format_count(static_cast<double>(costs[i].weights)) << ','
        << format_count(static_cast<double>(costs[i].activations)) << ','
        << format_count(static_cast<double>(s.element_count())) << ','
        << (it == ai.end() ? "" : format_ratio(it->second)) << '\n';
  }
  out << "# median=" << format_ratio(stats.median) << '\n';
  out << "# variance=" << format_count(stats.variance) << '\n';
}

// ---------------------------------------------------------------- calibrate

struct ProfileRow {
  ReuseRatios reuse;
  std::optional<double> ai_c;
  std::optional<double> macs;
};

std::optional<double> optional_number(const CsvTable& t, const CsvRow& row,
                                      std::optional<std::size_t> col, const char* what) {
  if (!col || row.fields[*col].empty()) return std::nullopt;
  try {
    return parse_number(row.fields[*col], what);
  } catch (const InputError& e) {
    throw InputError(t.where(row) + ": " + e.what());
  }
}

double required_number(const CsvTable& t, const CsvRow& row, std::size_t col, const char* what) {
  auto v = optional_number(t, row, col, what);
  if (!v) throw InputError(t.where(row) + ": missing " + what);
  return *v;
}

std::map<std::string, ProfileRow> load_profiles(const std::string& path) {
  const auto t = read_csv_file(path);
  const auto c_model = t.column("model");
  const auto c_wr = t.column("weight_reuse");
  const auto c_ar = t.column("activation_reuse");
  const auto c_ai = t.find_column("ai_c");
  const auto c_macs = t.find_column("macs");
  std::map<std::string, ProfileRow> out;
  for (const auto& row : t.rows()) {
    ProfileRow p;
    p.reuse.weight_reuse = required_number(t, row, c_wr, "weight_reuse");
    p.reuse.activation_reuse = required_number(t, row, c_ar, "activation_reuse");
    if (!(p.reuse.weight_reuse > 0.0) || !(p.reuse.activation_reuse > 0.0)) {
      throw InputError(t.where(row) + ": reuse ratios must be positive");
    }
    p.ai_c = optional_number(t, row, c_ai, "ai_c");
    p.macs = optional_number(t, row, c_macs, "macs");
    if (!out.emplace(row.fields[c_model], p).second) {
      throw InputError(t.where(row) + ": duplicate model '" + row.fields[c_model] + "'");
    }
  }
  return out;
}

std::map<std::string, double> load_mac_table(const std::string& path) {
  const auto t = read_csv_file(path);
  const auto c_model = t.column("model");
  const auto c_macs = t.column("macs");
  std::map<std::string, double> out;
  for (const auto& row : t.rows()) {
    out[row.fields[c_model]] = required_number(t, row, c_macs, "macs");
  }
  return out;
}

struct CalibrateOptions {
  std::string profiles;
  std::string measurements;
  std::vector<std::string> models;
  std::string macs;
  std::optional<std::string> device;
  std::optional<std::int64_t> batch;
  double step = kDefaultAlphaStep;
  double epsilon = kDefaultPlateauEpsilon;
  std::string joined;
  std::string format = "csv";
};

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

void cmd_calibrate(const CalibrateOptions& o, std::ostream& out) {
  check_format(o.format);
  const auto profiles = load_profiles(o.profiles);
  const auto records = load_measurements(read_text_file(o.measurements), o.measurements);

  std::set<std::pair<std::string, std::int64_t>> groups;
  for (const auto& r : records) {
    if ((!o.device || r.device == *o.device) && (!o.batch || r.batch == *o.batch)) {
      groups.emplace(r.device, r.batch);
    }
  }
  if (groups.empty()) throw InputError(o.measurements + ": no records match --device/--batch");
  if (groups.size() > 1) {
    throw InputError(o.measurements +
                     ": records span several (device, batch) groups; pick one with "
                     "--device and --batch");
  }
  const auto [device, batch] = *groups.begin();

  std::map<std::string, double> mac_file;
  if (!o.macs.empty()) mac_file = load_mac_table(o.macs);
  std::map<std::string, double> mac_models;
  for (const auto& p : profile_models(o.models)) mac_models[p.model] = static_cast<double>(p.macs);

  std::vector<const MeasurementRecord*> selected;
  std::set<std::string> measured;
  for (const auto& r : records) {
    if (r.device == device && r.batch == batch) {
      selected.push_back(&r);
      measured.insert(r.model);
    }
  }
  std::vector<std::string> orphans;
  for (const auto* r : selected) {
    if (!profiles.count(r->model)) orphans.push_back(r->model + " (measurements only)");
  }
  for (const auto& [name, _] : profiles) {
    if (!measured.count(name)) orphans.push_back(name + " (profiles only)");
  }
  if (!orphans.empty()) throw InputError("unmatched models: " + join_names(orphans));

  std::vector<ReuseRatios> reuse;
  std::vector<double> efficiency;
  std::vector<double> ai_c;
  std::vector<std::string> missing_macs;
  std::ostringstream joined;
  joined << "model,device,batch,weight_reuse,activation_reuse,ai_c,di,macs,efficiency\n";
  for (const auto* r : selected) {
    const auto& prof = profiles.at(r->model);
    MeasurementRecord rec = *r;
    if (!rec.macs) {
      if (auto it = mac_file.find(rec.model); it != mac_file.end()) {
        rec.macs = it->second;
      } else if (auto jt = mac_models.find(rec.model); jt != mac_models.end()) {
        rec.macs = jt->second;
      } else if (prof.macs) {
        rec.macs = prof.macs;
      }
    }
    if (!rec.macs) {
      missing_macs.push_back(rec.model);
      continue;
    }
    reuse.push_back(prof.reuse);
    efficiency.push_back(energy_efficiency(rec));
    const double aic =
        prof.ai_c ? *prof.ai_c : ai_from_reuse(prof.reuse.weight_reuse, prof.reuse.activation_reuse);
    ai_c.push_back(aic);
    joined << rec.model << ',' << rec.device << ',' << rec.batch << ','
           << format_exact(prof.reuse.weight_reuse) << ','
           << format_exact(prof.reuse.activation_reuse) << ',' << format_exact(aic) << ','
           << format_exact(weighted_intensity(prof.reuse, kDefaultAlpha)) << ','
           << format_exact(*rec.macs) << ',' << format_exact(efficiency.back()) << '\n';
  }
  if (!missing_macs.empty()) {
    throw InputError("no MAC count for: " + join_names(missing_macs) +
                     " (supply --models, --macs or a macs column)");
  }

  const auto curve = calibrate(reuse, efficiency, o.step, o.epsilon);
  const double ai_rp = pearson(ai_c, efficiency);
  const double ai_rs = spearman(ai_c, efficiency);

  if (!o.joined.empty()) {
    std::ofstream f(o.joined, std::ios::binary);
    if (!f) throw InputError(o.joined + ": cannot write");
    f << joined.str();
  }

  if (o.format == "json") {
    json grid = json::array();
    for (const auto& g : curve.grid) grid.push_back({{"alpha", g.alpha}, {"r_p", g.r_p}, {"r_s", g.r_s}});
    out << json{{"device", device},
                {"batch", batch},
                {"n", reuse.size()},
                {"grid", grid},
                {"selected_alpha", curve.selected_alpha},
                {"epsilon", curve.epsilon},
                {"rule", curve.rule},
                {"ai_c", {{"r_p", ai_rp}, {"r_s", ai_rs}}}}
               .dump(2)
        << '\n';
    return;
  }
  out << "alpha,r_p,r_s\n";
  for (const auto& g : curve.grid) {
    out << format_ratio(g.alpha) << ',' << format_ratio(g.r_p) << ',' << format_ratio(g.r_s)
        << '\n';
  }
  out << "# device=" << device << ",batch=" << batch << ",n=" << reuse.size() << '\n';
  out << "# selected_alpha=" << format_ratio(curve.selected_alpha)
      << ",epsilon=" << format_ratio(curve.epsilon) << '\n';
  out << "# ai_c r_p=" << format_ratio(ai_rp) << ",r_s=" << format_ratio(ai_rs) << '\n';
}

// ---------------------------------------------------------------- roofline

struct RooflineOptions {
  std::string hw;
  std::string metric = "ai";
  std::string mode = "raw";
  double alpha = kDefaultAlpha;
  double bytes_per_element = 4.0;
  double flops_per_mac = 2.0;
  std::vector<std::string> inputs;
};

std::vector<LabeledIntensity> read_intensities(const std::string& path, const std::string& metric,
                                               double alpha) {
  const auto t = read_csv_file(path);
  const auto c_model = t.column("model");
  const auto c_wr = t.find_column("weight_reuse");
  const auto c_ar = t.find_column("activation_reuse");
  const auto c_ai = t.find_column("ai_c");
  const auto c_di = t.find_column("di");
  const auto c_meas = t.find_column("measured_ops");
  const bool have_reuse = c_wr && c_ar;
  if (metric == "ai" && !c_ai && !have_reuse) {
    throw InputError(path + ": needs an ai_c column or weight_reuse and activation_reuse");
  }
  if (metric == "di" && !c_di && !have_reuse) {
    throw InputError(path + ": needs a di column or weight_reuse and activation_reuse");
  }
  std::vector<LabeledIntensity> points;
  for (const auto& row : t.rows()) {
    LabeledIntensity p;
    p.label = row.fields[c_model];
    std::optional<ReuseRatios> reuse;
    if (have_reuse) {
      reuse = ReuseRatios{required_number(t, row, *c_wr, "weight_reuse"),
                          required_number(t, row, *c_ar, "activation_reuse")};
    }
    if (metric == "ai") {
      p.intensity = c_ai ? required_number(t, row, *c_ai, "ai_c")
                         : ai_from_reuse(reuse->weight_reuse, reuse->activation_reuse);
    } else {
      p.intensity = reuse ? weighted_intensity(*reuse, alpha) : required_number(t, row, *c_di, "di");
    }
    if (!(p.intensity > 0.0)) throw InputError(t.where(row) + ": intensity must be positive");
    p.measured_ops = optional_number(t, row, c_meas, "measured_ops");
    points.push_back(std::move(p));
  }
  return points;
}

void cmd_roofline(const RooflineOptions& o, std::ostream& out) {
  if (o.metric != "ai" && o.metric != "di") {
    throw ArgumentError("--metric must be ai or di, got '" + o.metric + "'");
  }
  const auto hw = load_hardware(o.hw);
  IntensityUnits units;
  units.mode = parse_intensity_mode(o.mode);
  units.bytes_per_element = o.bytes_per_element;
  units.flops_per_mac = o.flops_per_mac;
  std::vector<LabeledIntensity> points;
  for (const auto& path : o.inputs) {
    auto more = read_intensities(path, o.metric, o.alpha);
    points.insert(points.end(), more.begin(), more.end());
  }
  const auto rows = roofline_points(hw, points, units);
  out << kRooflineHeader << '\n';
  for (const auto& r : rows) {
    out << r.label << ',' << format_ratio(r.intensity) << ',' << format_count(r.attainable_ops)
        << ',' << (r.bound ? std::string(to_string(*r.bound)) : std::string()) << ','
        << (r.measured_ops ? format_count(*r.measured_ops) : std::string()) << '\n';
  }
}

// ---------------------------------------------------------------- stats

struct StatsOptions {
  std::string csv;
  std::string x;
  std::string y;
  std::optional<double> r;
  std::optional<std::int64_t> n;
};

void cmd_stats(const StatsOptions& o, std::ostream& out) {
  double r_p = 0.0;
  std::optional<double> r_s;
  std::int64_t n = 0;
  if (!o.csv.empty()) {
    if (o.x.empty() || o.y.empty()) throw ArgumentError("--csv needs --x and --y");
    if (o.r || o.n) throw ArgumentError("--csv cannot be combined with --r/--n");
    const auto t = read_csv_file(o.csv);
    const auto cx = t.column(o.x);
    const auto cy = t.column(o.y);
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& row : t.rows()) {
      xs.push_back(required_number(t, row, cx, o.x.c_str()));
      ys.push_back(required_number(t, row, cy, o.y.c_str()));
    }
    r_p = pearson(xs, ys);
    r_s = spearman(xs, ys);
    n = static_cast<std::int64_t>(xs.size());
  } else {
    if (!o.r || !o.n) throw ArgumentError("give either --csv/--x/--y or --r/--n");
    if (!(*o.r >= -1.0 && *o.r <= 1.0)) throw ArgumentError("--r must lie in [-1, 1]");
    r_p = *o.r;
    n = *o.n;
  }
  out << "n,r_p,r_s,ci95_lower,ci95_upper,ci95_width,ci99_lower,ci99_upper,ci99_width\n";
  out << n << ',' << format_ratio(r_p) << ',' << opt_ratio(r_s);
  for (auto level : {ConfidenceLevel::k95, ConfidenceLevel::k99}) {
    if (std::abs(r_p) >= 1.0) {
      // The interval degenerates to the point itself; Fisher Z is infinite.
      out << ",,,";
      continue;
    }
    const auto ci = fisher_ci(r_p, n, level);
    out << ',' << format_ratio(ci.lower) << ',' << format_ratio(ci.upper) << ','
        << format_ratio(ci.width());
  }
  out << '\n';
}

// ---------------------------------------------------------------- power / energy

void cmd_power(const std::string& samples, double idle, bool subtract, std::ostream& out) {
  const auto s = load_power_samples(read_text_file(samples), samples);
  out << "samples,p_avg_w\n" << s.size() << ',' << format_ratio(average_power(s, idle, subtract))
      << '\n';
}

void cmd_energy(const std::string& measurements, const std::vector<std::string>& models,
                bool per_frame, std::ostream& out) {
  auto records = load_measurements(read_text_file(measurements), measurements);
  std::map<std::string, double> macs;
  for (const auto& p : profile_models(models)) macs[p.model] = static_cast<double>(p.macs);
  out << "model,device,batch,epp_j_per_px,efficiency_macs_per_j\n";
  for (auto& r : records) {
    if (!r.macs) {
      if (auto it = macs.find(r.model); it != macs.end()) r.macs = it->second;
    }
    out << r.model << ',' << r.device << ',' << r.batch << ',' << format_count(epp(r, per_frame))
        << ',' << (r.macs ? format_count(energy_efficiency(r)) : std::string()) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DNN data-reuse and energy-efficiency analyzer", "dnnreuse"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dnnreuse 0.1.0");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Whole-network profile and DI metrics");
  analyze->add_option("models", ao.models, "Model documents")->required();
  analyze->add_option("--batch", ao.batch, "Batch size");
  analyze->add_option("--alpha", ao.alpha, "Reuse coefficient");
  analyze->add_option("--format", ao.format, "csv or json");
  analyze->add_option("--tau-low", ao.thresholds.low, "A/W below this is activations-scarce");
  analyze->add_option("--tau-high", ao.thresholds.high, "A/W above this is activations-dominant");

  std::string layers_model;
  std::string layers_format = "csv";
  auto* layers = app.add_subcommand("layers", "Per-layer costs and intensity statistics");
  layers->add_option("model", layers_model, "Model document")->required();
  layers->add_option("--format", layers_format, "csv or json");

  CalibrateOptions co;
  std::string co_device;
  std::int64_t co_batch = 0;
  auto* cal = app.add_subcommand("calibrate", "Sweep alpha against measured efficiency");
  cal->add_option("--profiles", co.profiles, "CSV with model, weight_reuse, activation_reuse")
      ->required();
  cal->add_option("--measurements", co.measurements, "Measurements CSV")->required();
  cal->add_option("--models", co.models, "Model documents supplying MAC counts");
  cal->add_option("--macs", co.macs, "CSV with model, macs");
  auto* dev_opt = cal->add_option("--device", co_device, "Device to select");
  auto* batch_opt = cal->add_option("--batch", co_batch, "Batch size to select");
  cal->add_option("--step", co.step, "Alpha grid step");
  cal->add_option("--epsilon", co.epsilon, "Plateau threshold on r_p gain");
  cal->add_option("--joined", co.joined, "Write the joined table here");
  cal->add_option("--format", co.format, "csv or json");

  RooflineOptions ro;
  auto* roof = app.add_subcommand("roofline", "Roofline classification and plot data");
  roof->add_option("--hw", ro.hw, "Hardware document")->required();
  roof->add_option("--metric", ro.metric, "ai or di");
  roof->add_option("--mode", ro.mode, "raw or converted");
  roof->add_option("--alpha", ro.alpha, "Reuse coefficient for di");
  roof->add_option("--bytes-per-element", ro.bytes_per_element, "Converted mode");
  roof->add_option("--flops-per-mac", ro.flops_per_mac, "Converted mode");
  roof->add_option("inputs", ro.inputs, "CSV files with a model column")->required();

  StatsOptions so;
  double so_r = 0.0;
  std::int64_t so_n = 0;
  auto* stats = app.add_subcommand("stats", "Correlations and Fisher confidence intervals");
  stats->add_option("--csv", so.csv, "CSV input");
  stats->add_option("--x", so.x, "x column");
  stats->add_option("--y", so.y, "y column");
  auto* r_opt = stats->add_option("--r", so_r, "Sample correlation");
  auto* n_opt = stats->add_option("--n", so_n, "Sample size");

  std::string samples;
  double idle = 0.0;
  bool subtract_idle = false;
  auto* power = app.add_subcommand("power", "Average power of a sample trace");
  power->add_option("--samples", samples, "CSV with t_ms, watts")->required();
  power->add_option("--idle", idle, "Idle power in watts");
  power->add_flag("--subtract-idle", subtract_idle, "Subtract idle power");

  std::string e_meas;
  std::vector<std::string> e_models;
  bool per_frame = false;
  auto* energy = app.add_subcommand("energy", "EPP and energy efficiency per record");
  energy->add_option("--measurements", e_meas, "Measurements CSV")->required();
  energy->add_option("--models", e_models, "Model documents supplying MAC counts");
  energy->add_flag("--per-frame", per_frame, "Divide EPP by the batch size");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("dnnreuse");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::ostringstream buffer;
  try {
    if (analyze->parsed()) {
      cmd_analyze(ao, buffer);
    } else if (layers->parsed()) {
      cmd_layers(layers_model, layers_format, buffer);
    } else if (cal->parsed()) {
      if (dev_opt->count() > 0) co.device = co_device;
      if (batch_opt->count() > 0) co.batch = co_batch;
      cmd_calibrate(co, buffer);
    } else if (roof->parsed()) {
      cmd_roofline(ro, buffer);
    } else if (stats->parsed()) {
      if (r_opt->count() > 0) so.r = so_r;
      if (n_opt->count() > 0) so.n = so_n;
      cmd_stats(so, buffer);
    } else if (power->parsed()) {
      cmd_power(samples, idle, subtract_idle, buffer);
    } else if (energy->parsed()) {
      cmd_energy(e_meas, e_models, per_frame, buffer);
    }
  } catch (const InputError& e) {
    err << "dnnreuse: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DegenerateError& e) {
    err << "dnnreuse: degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "dnnreuse: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace dnnreuse::cli
