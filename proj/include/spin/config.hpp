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

// Run configuration: one JSON document drives a whole CLI run. Relative paths
// resolve against the directory holding the config file.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spin/augment.hpp"
#include "spin/dataset.hpp"
#include "spin/error.hpp"
#include "spin/geometry.hpp"
#include "spin/solar.hpp"
#include "spin/synth.hpp"
#include "spin/time.hpp"

namespace spin {

enum class Transformation { raw, sun_centred, csa, spin, spin_closeup };

inline std::string_view to_string(Transformation t) {
  switch (t) {
    case Transformation::raw: return "raw";
    case Transformation::sun_centred: return "sun_centred";
    case Transformation::csa: return "csa";
    case Transformation::spin: return "spin";
    case Transformation::spin_closeup: return "spin_closeup";
  }
  return "raw";
}

inline Transformation parse_transformation(std::string_view s) {
  for (auto t : {Transformation::raw, Transformation::sun_centred, Transformation::csa,
                 Transformation::spin, Transformation::spin_closeup}) {
    if (to_string(t) == s) return t;
  }
  throw ConfigError("unknown transformation '" + std::string(s) + "'");
}

inline bool is_polar(Transformation t) {
  return t == Transformation::spin || t == Transformation::spin_closeup;
}

struct TdiConfig {
  std::size_t n_windows = 200;
  std::size_t window_len = 100;
  std::uint64_t seed = 0;
};

struct CloudIndexConfig {
  int n_days = 10;
  int slot_resolution_s = 300;
};

struct SynthConfig {
  SceneSpec scene;
  int days = 1;
  int frames_per_day = 30;
};

struct RunConfig {
  std::filesystem::path images_dir;
  std::filesystem::path irradiance_csv;
  std::filesystem::path sun_sidecar;
  std::filesystem::path manifest;
  std::filesystem::path output_dir;

  Site site{48.713, 2.208};
  Seconds cadence{120};
  int context_frames = 5;
  std::vector<Seconds> horizons = sky_horizons();
  Transformation transformation = Transformation::raw;
  SpinGrid grid;
  std::vector<AugmentPolicy> augment;
  TargetSpec target;
  int eval_year = 2019;
  double min_elevation_deg = 10.0;
  std::optional<TdiConfig> tdi;
  bool clearsky_fallback = false;
  unsigned workers = 8;
  CloudIndexConfig cloudindex;
  std::optional<SynthConfig> synth;
};

namespace detail {

using nlohmann::json;

inline PixelPoint point_from(const json& j) {
  if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
  return {j.at("x").get<double>(), j.at("y").get<double>()};
}

inline std::uint64_t required_seed(const json& j, const std::string& where) {
  if (!j.contains("seed")) throw ConfigError(where + ": an explicit \"seed\" is required");
  return j.at("seed").get<std::uint64_t>();
}

}  // namespace detail

inline SceneSpec scene_from_json(const nlohmann::json& j) {
  using detail::point_from;
  SceneSpec s;
  s.seed = detail::required_seed(j, "scene");
  if (j.value("random", false)) {
    s = random_scene(j.value("size", 128), s.seed, j.value("n_clouds", 6), j.value("channels", 1));
  }
  s.width = s.height = j.value("size", s.width);
  s.channels = j.value("channels", s.channels);
  if (j.contains("sun")) {
    const auto& sj = j.at("sun");
    s.sun.center = point_from(sj.at("center"));
    s.sun.radius = sj.value("radius", s.sun.radius);
    s.sun.intensity = sj.value("intensity", s.sun.intensity);
  }
  if (j.contains("background")) {
    const auto& b = j.at("background");
    if (b.contains("center")) s.background.center = point_from(b.at("center"));
    s.background.inner = b.value("inner", s.background.inner);
    s.background.outer = b.value("outer", s.background.outer);
    s.background.radius = b.value("radius", s.background.radius);
  }
  if (j.contains("clouds")) {
    s.clouds.clear();
    for (const auto& c : j.at("clouds")) {
      CloudBlob b;
      b.center = point_from(c.at("center"));
      if (c.contains("sigma")) {
        const double sg = c.at("sigma").get<double>();
        b.sxx = b.syy = sg * sg;
        b.sxy = 0.0;
      }
      b.sxx = c.value("sxx", b.sxx);
      b.syy = c.value("syy", b.syy);
      b.sxy = c.value("sxy", b.sxy);
      b.opacity = c.value("opacity", b.opacity);
      b.brightness = c.value("brightness", b.brightness);
      if (c.contains("velocity")) b.velocity = point_from(c.at("velocity"));
      s.clouds.push_back(b);
    }
  }
  if (j.contains("land_sea")) {
    const auto& l = j.at("land_sea");
    LandSeaMask m;
    m.boundary_x = l.value("boundary_x", s.width / 2.0);
    m.sea_albedo = l.value("sea_albedo", m.sea_albedo);
    m.land_albedo = l.value("land_albedo", m.land_albedo);
    s.land_sea = m;
  }
  if (j.contains("start")) s.start = parse_utc(j.at("start").get<std::string>());
  if (j.contains("cadence_s")) s.cadence = Seconds{j.at("cadence_s").get<long>()};
  if (j.contains("site")) s.site = {j.at("site").at("lat").get<double>(), j.at("site").at("lon").get<double>()};
  s.validate();
  return s;
}

inline RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  RunConfig c;
  auto path = [&](const char* key, bool must_exist) -> std::filesystem::path {
    if (!j.contains(key)) return {};
    std::filesystem::path p = j.at(key).get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    if (must_exist && !std::filesystem::exists(p)) {
      throw ConfigError(std::string(key) + " does not exist: " + p.string());
    }
    return p;
  };
  c.images_dir = path("images_dir", true);
  c.irradiance_csv = path("irradiance_csv", true);
  c.sun_sidecar = path("sun_sidecar", true);
  c.manifest = path("manifest", true);
  c.output_dir = path("output_dir", false);
  if (c.output_dir.empty()) throw ConfigError("output_dir is required");

  if (j.contains("site")) {
    c.site = {j.at("site").at("lat").get<double>(), j.at("site").at("lon").get<double>()};
    if (std::abs(c.site.lat_deg) > 90.0) throw ConfigError("site latitude out of range");
  }
  c.cadence = Seconds{j.value("cadence_s", c.cadence.count())};
  if (c.cadence.count() <= 0) throw ConfigError("cadence_s must be positive");
  c.context_frames = j.value("context_frames", c.context_frames);
  if (c.context_frames < 1) throw ConfigError("context_frames must be >= 1");
  if (j.contains("horizons_s")) {
    c.horizons.clear();
    for (long h : j.at("horizons_s").get<std::vector<long>>()) {
      if (h <= 0) throw ConfigError("horizons must be positive");
      c.horizons.emplace_back(h);
    }
  }
  if (j.contains("transformation")) c.transformation = parse_transformation(j.at("transformation").get<std::string>());
  if (j.contains("spin_grid")) {
    const auto& g = j.at("spin_grid");
    c.grid.n_r = g.value("n_r", c.grid.n_r);
    c.grid.n_theta = g.value("n_theta", c.grid.n_theta);
  }
  c.grid.out_w = c.grid.out_h = j.value("output_size", 128);
  if (c.grid.out_w < 1) throw ConfigError("output_size must be positive");

  if (j.contains("augment")) {
    for (const auto& p : j.at("augment")) {
      AugmentPolicy a;
      try {
        a.kind = parse_augment_kind(p.at("kind").get<std::string>());
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
      }
      a.probability = p.value("probability", a.kind == AugmentKind::temporal_flip ? 0.5 : 1.0);
      a.rng_seed = detail::required_seed(p, "augment." + std::string(to_string(a.kind)));
      if (p.contains("center")) a.center = detail::point_from(p.at("center"));
      if (!(a.probability >= 0.0 && a.probability <= 1.0)) throw ConfigError("augment probability out of [0,1]");
      c.augment.push_back(a);
    }
  }
  if (j.contains("target")) {
    const auto& t = j.at("target");
    const std::string mode = t.value("mode", "absolute");
    if (mode == "absolute") {
      c.target.mode = TargetMode::absolute;
    } else if (mode == "change") {
      c.target.mode = TargetMode::change;
    } else {
      throw ConfigError("target.mode must be absolute or change");
    }
    c.target.aux_irradiance_channel = t.value("aux_irradiance_channel", false);
  }
  c.eval_year = j.value("eval_year", c.eval_year);
  c.min_elevation_deg = j.value("min_elevation_deg", c.min_elevation_deg);
  if (j.contains("tdi")) {
    const auto& t = j.at("tdi");
    TdiConfig tc;
    tc.n_windows = t.value("n_windows", tc.n_windows);
    tc.window_len = t.value("window_len", tc.window_len);
    tc.seed = detail::required_seed(t, "tdi");
    if (tc.window_len < 2) throw ConfigError("tdi.window_len must be >= 2");
    c.tdi = tc;
  }
  c.clearsky_fallback = j.value("clearsky_fallback", false);
  c.workers = j.value("workers", 8u);
  if (j.contains("cloudindex")) {
    const auto& ci = j.at("cloudindex");
    c.cloudindex.n_days = ci.value("n_days", c.cloudindex.n_days);
    c.cloudindex.slot_resolution_s = ci.value("slot_resolution_s", static_cast<int>(c.cadence.count()));
  } else {
    c.cloudindex.slot_resolution_s = static_cast<int>(c.cadence.count());
  }
  if (j.contains("synth")) {
    const auto& s = j.at("synth");
    SynthConfig sc;
    try {
      sc.scene = scene_from_json(s.at("scene"));
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("synth.scene: ") + e.what());
    }
    sc.days = s.value("days", 1);
    sc.frames_per_day = s.value("frames_per_day", 30);
    if (sc.days < 1 || sc.frames_per_day < 1) throw ConfigError("synth days/frames_per_day must be >= 1");
    c.synth = sc;
  }
  return c;
}

inline RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw ConfigError("cannot open config " + file.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
    return config_from_json(j, file.has_parent_path() ? file.parent_path() : std::filesystem::path("."));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(file.string() + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
}

/// Sun positions keyed by timestamp, from `timestamp_utc,x,y[,visible]`.
inline std::map<Instant, SunPixel> load_sun_sidecar(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open sun sidecar " + path.string());
  std::map<Instant, SunPixel> out;
  std::string line;
  std::getline(is, line);  // header
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv_line(line);
    try {
      if (cells.size() < 3) throw InvalidArgument("expected timestamp_utc,x,y");
      SunPixel s{{std::stod(cells[1]), std::stod(cells[2])}, true};
      if (cells.size() > 3 && !cells[3].empty()) s.visible = cells[3] != "0";
      out[parse_utc(cells[0])] = s;
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace spin
