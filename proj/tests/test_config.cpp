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
#include <gtest/gtest.h>

#include <fstream>

#include "spin/config.hpp"
#include "support.hpp"

using namespace spin;
using nlohmann::json;

namespace {

std::filesystem::path base() {
  static const auto dir = [] {
    auto d = fixture::scratch("config");
    std::filesystem::create_directories(d / "imgs");
    std::ofstream(d / "irr.csv") << "timestamp_utc,ghi_wm2\n";
    std::ofstream(d / "sun.csv") << "timestamp_utc,x,y,visible\n2019-06-21T10:00:00Z,12.5,40,0\n2019-06-21T10:02:00Z,13,41\n";
    return d;
  }();
  return dir;
}

}  // namespace

TEST(Config, DefaultsAndPathResolution) {
  const RunConfig c = config_from_json(json{{"output_dir", "out"}, {"images_dir", "imgs"}}, base());
  EXPECT_EQ(c.output_dir, base() / "out");
  EXPECT_EQ(c.images_dir, base() / "imgs");
  EXPECT_EQ(c.cadence, Seconds{120});
  EXPECT_EQ(c.context_frames, 5);
  EXPECT_EQ(c.horizons, sky_horizons());
  EXPECT_EQ(c.transformation, Transformation::raw);
  EXPECT_EQ(c.grid.n_theta, 360);
  EXPECT_EQ(c.grid.out_w, 128);
  EXPECT_EQ(c.min_elevation_deg, 10.0);
  EXPECT_EQ(c.cloudindex.n_days, 10);
  EXPECT_EQ(c.cloudindex.slot_resolution_s, 120);
  EXPECT_FALSE(c.tdi);
}

TEST(Config, FullDocument) {
  const json j = json::parse(R"({
    "output_dir": "o", "irradiance_csv": "irr.csv", "site": {"lat": 10, "lon": -3},
    "cadence_s": 300, "context_frames": 3, "horizons_s": [600, 1200],
    "transformation": "spin_closeup", "spin_grid": {"n_r": 40, "n_theta": 180}, "output_size": 64,
    "augment": [{"kind": "polar_translation", "seed": 5}, {"kind": "temporal_flip", "seed": 6}],
    "target": {"mode": "change", "aux_irradiance_channel": true},
    "eval_year": 2018, "min_elevation_deg": 5, "tdi": {"n_windows": 100, "window_len": 50, "seed": 9},
    "clearsky_fallback": true, "workers": 3, "cloudindex": {"n_days": 4}})");
  const RunConfig c = config_from_json(j, base());
  EXPECT_EQ(c.site.lat_deg, 10);
  EXPECT_EQ(c.horizons, (std::vector<Seconds>{Seconds{600}, Seconds{1200}}));
  EXPECT_EQ(c.transformation, Transformation::spin_closeup);
  EXPECT_TRUE(is_polar(c.transformation));
  EXPECT_EQ(c.grid.n_r, 40);
  EXPECT_EQ(c.grid.out_h, 64);
  ASSERT_EQ(c.augment.size(), 2u);
  EXPECT_EQ(c.augment[0].probability, 1.0);
  EXPECT_EQ(c.augment[1].probability, 0.5);
  EXPECT_EQ(c.augment[1].rng_seed, 6u);
  EXPECT_EQ(c.target.mode, TargetMode::change);
  EXPECT_TRUE(c.target.aux_irradiance_channel);
  EXPECT_EQ(c.tdi->window_len, 50u);
  EXPECT_EQ(c.workers, 3u);
  EXPECT_EQ(c.cloudindex.n_days, 4);
  EXPECT_EQ(c.cloudindex.slot_resolution_s, 300);
}

TEST(Config, Rejections) {
  auto bad = [](const char* text) {
    EXPECT_THROW(config_from_json(json::parse(text), base()), ConfigError) << text;
  };
  bad(R"({})");
  bad(R"({"output_dir": "o", "images_dir": "missing"})");
  bad(R"({"output_dir": "o", "transformation": "fisheye"})");
  bad(R"({"output_dir": "o", "augment": [{"kind": "rotation"}]})");
  bad(R"({"output_dir": "o", "augment": [{"kind": "warp", "seed": 1}]})");
  bad(R"({"output_dir": "o", "augment": [{"kind": "rotation", "seed": 1, "probability": 2}]})");
  bad(R"({"output_dir": "o", "tdi": {"n_windows": 3}})");
  bad(R"({"output_dir": "o", "cadence_s": 0})");
  bad(R"({"output_dir": "o", "horizons_s": [0]})");
  bad(R"({"output_dir": "o", "target": {"mode": "ratio"}})");
  bad(R"({"output_dir": "o", "synth": {"scene": {"size": 32}}})");
}

TEST(Config, LoadFileErrors) {
  std::ofstream(base() / "broken.json") << "{ not json";
  EXPECT_THROW(load_config(base() / "broken.json"), ConfigError);
  EXPECT_THROW(load_config(base() / "absent.json"), ConfigError);
  std::ofstream(base() / "ok.json") << R"({"output_dir": "o"})";
  EXPECT_EQ(load_config(base() / "ok.json").output_dir, base() / "o");
}

TEST(Config, SceneDocument) {
  const json j = json::parse(R"({"seed": 4, "size": 48, "channels": 3,
    "sun": {"center": [20, 21], "radius": 3},
    "clouds": [{"center": [10, 10], "sigma": 4, "opacity": 0.7, "velocity": [1, -1]}],
    "land_sea": {"boundary_x": 24}, "start": "2019-07-01T09:00:00Z", "cadence_s": 300})");
  const SceneSpec s = scene_from_json(j);
  EXPECT_EQ(s.width, 48);
  EXPECT_EQ(s.channels, 3);
  EXPECT_EQ(s.sun.center, (PixelPoint{20, 21}));
  ASSERT_EQ(s.clouds.size(), 1u);
  EXPECT_EQ(s.clouds[0].sxx, 16.0);
  EXPECT_EQ(s.clouds[0].velocity, (PixelPoint{1, -1}));
  EXPECT_EQ(s.land_sea->boundary_x, 24.0);
  EXPECT_EQ(s.cadence, Seconds{300});
  const SceneSpec r = scene_from_json(json::parse(R"({"seed": 4, "random": true, "size": 64})"));
  EXPECT_EQ(render_frame(r, 0), render_frame(random_scene(64, 4), 0));
}

TEST(Config, SunSidecar) {
  const auto m = load_sun_sidecar(base() / "sun.csv");
  ASSERT_EQ(m.size(), 2u);
  const auto& first = m.at(parse_utc("2019-06-21T10:00:00Z"));
  EXPECT_EQ(first.position, (PixelPoint{12.5, 40}));
  EXPECT_FALSE(first.visible);
  EXPECT_TRUE(m.at(parse_utc("2019-06-21T10:02:00Z")).visible);
  std::ofstream(base() / "badsun.csv") << "timestamp_utc,x,y\nnot-a-time,1,2\n";
  EXPECT_THROW(load_sun_sidecar(base() / "badsun.csv"), DataError);
}
