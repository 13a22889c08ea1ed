/**
 * Copyright 2026 The SPIN Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spin/error.hpp"
#include "spin/metrics.hpp"

namespace spin {

/// One model at one horizon. Optional fields are written as null when absent
/// (no baseline for FS, no usable TDI window).
struct MetricReport {
  std::string model;
  double rmse_wm2 = 0.0;
  double mae_wm2 = 0.0;
  std::optional<double> fs_pct;
  double q95_wm2 = 0.0;
  std::optional<double> tdi_pct;
  std::optional<double> tdi_advance_pct;
  std::optional<double> tdi_late_pct;
  std::size_t n_samples = 0;
  long horizon_s = 0;
};

/// Fills error metrics from `fs`, and FS against `baseline_error` when given.
inline MetricReport make_report(std::string model, const ForecastSet& fs,
                                std::optional<double> baseline_rmse) {
  MetricReport r;
  r.model = std::move(model);
  r.rmse_wm2 = rmse(fs);
  r.mae_wm2 = mae(fs);
  r.q95_wm2 = quantile95_abs_error(fs);
  r.n_samples = fs.size();
  r.horizon_s = fs.horizon.count();
  if (baseline_rmse && *baseline_rmse > 0.0) r.fs_pct = 100.0 * forecast_skill(r.rmse_wm2, *baseline_rmse);
  return r;
}

inline void set_tdi(MetricReport& r, const TdiSummary& s) {
  if (s.windows == 0) return;
  r.tdi_pct = s.tdi;
  r.tdi_advance_pct = s.advance;
  r.tdi_late_pct = s.late;
}

inline nlohmann::json to_json(const MetricReport& r) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"model", r.model},         {"rmse_wm2", r.rmse_wm2},
          {"mae_wm2", r.mae_wm2},     {"fs_pct", opt(r.fs_pct)},
          {"q95_wm2", r.q95_wm2},     {"tdi_pct", opt(r.tdi_pct)},
          {"tdi_advance_pct", opt(r.tdi_advance_pct)},
          {"tdi_late_pct", opt(r.tdi_late_pct)},
          {"n_samples", r.n_samples}, {"horizon_s", r.horizon_s}};
}

inline MetricReport report_from_json(const nlohmann::json& j) {
  auto opt = [&](const char* k) -> std::optional<double> {
    if (!j.contains(k) || j.at(k).is_null()) return std::nullopt;
    return j.at(k).get<double>();
  };
  MetricReport r;
  r.model = j.value("model", "");
  r.rmse_wm2 = j.at("rmse_wm2").get<double>();
  r.mae_wm2 = j.at("mae_wm2").get<double>();
  r.fs_pct = opt("fs_pct");
  r.q95_wm2 = j.at("q95_wm2").get<double>();
  r.tdi_pct = opt("tdi_pct");
  r.tdi_advance_pct = opt("tdi_advance_pct");
  r.tdi_late_pct = opt("tdi_late_pct");
  r.n_samples = j.at("n_samples").get<std::size_t>();
  r.horizon_s = j.at("horizon_s").get<long>();
  return r;
}

/// `<model>.h<horizon>.<key> = <value>` lines, one per metric.
inline std::string to_flat_text(const std::vector<MetricReport>& reports) {
  std::ostringstream os;
  os.precision(10);
  for (const auto& r : reports) {
    const std::string p = r.model + ".h" + std::to_string(r.horizon_s) + ".";
    auto put = [&](const char* k, const std::optional<double>& v) {
      os << p << k << " = ";
      if (v) {
        os << *v;
      } else {
        os << "NA";
      }
      os << '\n';
    };
    put("rmse_wm2", r.rmse_wm2);
    put("mae_wm2", r.mae_wm2);
    put("fs_pct", r.fs_pct);
    put("q95_wm2", r.q95_wm2);
    put("tdi_pct", r.tdi_pct);
    put("tdi_advance_pct", r.tdi_advance_pct);
    put("tdi_late_pct", r.tdi_late_pct);
    os << p << "n_samples = " << r.n_samples << '\n';
    os << p << "horizon_s = " << r.horizon_s << '\n';
  }
  return os.str();
}

/// Writes `<stem>.json` ({"reports": [...]}) and `<stem>.txt` side by side.
inline void write_reports(const std::vector<MetricReport>& reports, const std::filesystem::path& stem) {
  if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  std::ofstream js(stem.string() + ".json", std::ios::binary);
  std::ofstream txt(stem.string() + ".txt", std::ios::binary);
  if (!js || !txt) throw IoError("cannot write report " + stem.string());
  js << nlohmann::json{{"reports", arr}}.dump(2) << '\n';
  txt << to_flat_text(reports);
}

}  // namespace spin
