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

#include <algorithm>
#include <cmath>

#include "spin/cloudindex.hpp"
#include "spin/synth.hpp"
#include "support.hpp"

using namespace spin;

namespace {

const Instant kNoon = parse_utc("2019-06-10T12:00:00Z");

Instant day_at(int d, Instant base = kNoon) { return base + std::chrono::days{d}; }

Raster flat(int w, int h, float v) { return Raster(w, h, 1, v); }

// Reference for one pixel: the formula written out with its guard.
double ci_ref(double p, double pmin, double pmax) {
  if (pmax - pmin < 1.0 / 255.0) return 0.0;
  return std::clamp((p - pmin) / (pmax - pmin), 0.0, 1.0);
}

SceneSpec land_sea_scene(bool cloudy) {
  SceneSpec s;
  s.width = s.height = 64;
  s.sun.intensity = 0.0;
  s.land_sea = LandSeaMask{32.0, 0.08, 0.30};
  if (cloudy) {
    CloudBlob b;
    b.center = {32.0, 32.0};
    b.sxx = b.syy = 64.0;
    b.opacity = 3.0;  // saturated core, so the frame maximum is 1
    b.brightness = 1.0;
    s.clouds = {b};
  }
  return s;
}

}  // namespace

TEST(Background, FirstFrameAndIdenticalStack) {
  BackgroundModel m(4, 3, 1, 10, 300);
  const Raster f = fixture::noise(4, 3, 1, 1);
  m.update(f, kNoon);
  EXPECT_EQ(m.p_min(kNoon), std::vector<float>(f.data().begin(), f.data().end()));
  for (int d = 1; d < 10; ++d) m.update(f, day_at(d));
  EXPECT_EQ(m.p_min(day_at(9)), std::vector<float>(f.data().begin(), f.data().end()));
}

TEST(Background, DarkPixelWins) {
  BackgroundModel m(3, 3, 1, 10, 300);
  for (int d = 0; d < 5; ++d) {
    Raster f = flat(3, 3, 0.8f);
    if (d == 2) f.at(1, 1) = 0.1f;
    m.update(f, day_at(d));
  }
  const auto& pm = m.p_min(day_at(4));
  EXPECT_EQ(pm[4], 0.1f);
  EXPECT_EQ(pm[0], 0.8f);
}

TEST(Background, GeometryAndSlotErrors) {
  BackgroundModel m(4, 4, 1, 10, 300);
  EXPECT_THROW(m.update(flat(5, 4, 0.1f), kNoon), InvalidArgument);
  EXPECT_THROW(m.p_min(kNoon), MissingBackground);
  EXPECT_THROW(cloud_index(flat(4, 4, 0.1f), m, kNoon), MissingBackground);
  EXPECT_THROW(BackgroundModel(4, 4, 1, 0, 300), InvalidArgument);
  EXPECT_THROW(BackgroundModel(4, 4, 1, 10, 7), InvalidArgument);
}

TEST(Background, NearestSlot) {
  BackgroundModel m(1, 1, 1, 10, 300);
  EXPECT_EQ(m.slot_of(parse_utc("2019-06-10T12:00:00Z")), 144);
  EXPECT_EQ(m.slot_of(parse_utc("2019-06-10T12:02:29Z")), 144);
  EXPECT_EQ(m.slot_of(parse_utc("2019-06-10T12:02:30Z")), 145);
  EXPECT_EQ(m.slot_of(parse_utc("2019-06-10T23:58:00Z")), 0);
}

// Property: p_min never rises inside the window and recovers once the dark
// frame ages out.
TEST(Background, RollingWindowSchedule) {
  const int n_days = 10;
  BackgroundModel m(2, 1, 1, n_days, 300);
  Rng rng(3);
  std::vector<float> vals;
  for (int d = 0; d < 40; ++d) {
    const float v = (d % 13 == 0) ? 0.05f : 0.5f + 0.4f * static_cast<float>(rng.uniform01());
    vals.push_back(v);
    Raster f(2, 1, 1, v);
    const float before = d ? m.p_min(day_at(d - 1))[0] : 1.0f;
    m.update(f, day_at(d));
    const float expect = *std::min_element(vals.begin() + std::max(0, d - n_days + 1), vals.end());
    ASSERT_EQ(m.p_min(day_at(d))[0], expect) << d;
    if (d % 13 != 0 && (d - 1) % 13 != 0 && d >= n_days) {
      // Only eviction can raise the minimum.
      const float evicted = vals[d - n_days];
      if (m.p_min(day_at(d))[0] > before) ASSERT_EQ(before, evicted);
    }
  }
}

TEST(Background, LateAndRepeatedFramesForSameDay) {
  BackgroundModel m(1, 1, 1, 3, 300);
  m.update(Raster(1, 1, 1, 0.5f), day_at(10));
  m.update(Raster(1, 1, 1, 0.1f), day_at(5));  // outside the window of the newest day
  EXPECT_EQ(m.p_min(day_at(10))[0], 0.5f);
  m.update(Raster(1, 1, 1, 0.7f), day_at(10));  // replaces the same-day frame
  EXPECT_EQ(m.p_min(day_at(10))[0], 0.7f);
  m.update(Raster(1, 1, 1, 0.2f), day_at(9));  // in window, older than newest
  EXPECT_EQ(m.p_min(day_at(10))[0], 0.2f);
}

TEST(Background, SaveLoadRoundTrip) {
  const auto dir = fixture::scratch("bkg");
  BackgroundModel m(5, 4, 3, 4, 600);
  for (int d = 0; d < 6; ++d) {
    m.update(fixture::noise(5, 4, 3, d), day_at(d));
    m.update(fixture::noise(5, 4, 3, 100 + d), day_at(d) + Seconds{600});
  }
  m.save(dir / "b.bin");
  const BackgroundModel back = BackgroundModel::load(dir / "b.bin");
  EXPECT_EQ(back.slots().size(), m.slots().size());
  EXPECT_EQ(back.p_min(day_at(5)), m.p_min(day_at(5)));
  EXPECT_EQ(back.p_min(day_at(5) + Seconds{600}), m.p_min(day_at(5) + Seconds{600}));
  std::ofstream(dir / "junk.bin") << "nonsense";
  EXPECT_THROW(BackgroundModel::load(dir / "junk.bin"), DataError);
}

TEST(CloudIndex, Endpoints) {
  BackgroundModel m(8, 8, 1, 10, 300);
  const Raster bg = fixture::noise8(8, 8, 1, 4);
  Raster frame = bg;
  for (float& v : frame.data()) v = std::min(v, 0.9f);
  m.update(frame, kNoon);
  frame.at(3, 5) = 1.0f;
  const auto ci = cloud_index(frame, m, kNoon).ci;
  for (std::size_t i = 0; i < ci.size(); ++i) EXPECT_EQ(ci[i], i == 5 * 8 + 3 ? 1.0 : 0.0) << i;
}

TEST(CloudIndex, Midpoint) {
  BackgroundModel m(2, 1, 1, 10, 300);
  m.update(Raster::from_data(2, 1, 1, {0.2f, 0.2f}), kNoon);
  const auto ci = cloud_index(Raster::from_data(2, 1, 1, {0.6f, 1.0f}), m, kNoon).ci;
  EXPECT_NEAR(ci[0], 0.5, 1e-7);
  EXPECT_EQ(ci[1], 1.0);
}

TEST(CloudIndex, ThreeFrameStackByHand) {
  BackgroundModel m(3, 2, 1, 10, 300);
  const std::vector<std::vector<float>> stack = {
      {0.30f, 0.20f, 0.50f, 0.10f, 0.60f, 0.40f},
      {0.25f, 0.35f, 0.45f, 0.15f, 0.55f, 0.90f},
      {0.40f, 0.10f, 0.70f, 0.05f, 0.65f, 0.95f},
  };
  for (int d = 0; d < 3; ++d) m.update(Raster::from_data(3, 2, 1, stack[d]), day_at(d));
  const std::vector<float> frame = {0.50f, 0.80f, 0.45f, 0.60f, 0.20f, 0.40f};
  const auto ci = cloud_index(Raster::from_data(3, 2, 1, frame), m, day_at(2)).ci;
  const double pmax = 0.80f;
  auto r = [&](float p, float lo) { return (double(p) - double(lo)) / (pmax - double(lo)); };
  // pixels 2, 4 and 5 sit below their background and clamp to 0
  const double expect[6] = {r(0.50f, 0.25f), r(0.80f, 0.10f), 0.0, r(0.60f, 0.05f), 0.0, 0.0};
  for (int i = 0; i < 6; ++i) {
    double pmin = 1;
    for (int d = 0; d < 3; ++d) pmin = std::min<double>(pmin, stack[d][i]);
    EXPECT_NEAR(ci[i], ci_ref(frame[i], pmin, pmax), 1e-12) << i;
    EXPECT_NEAR(ci[i], expect[i], 1e-12) << i;
  }
}

TEST(CloudIndex, DegenerateRangeIsZero) {
  BackgroundModel m(2, 1, 1, 10, 300);
  m.update(Raster::from_data(2, 1, 1, {0.5f, 0.499f}), kNoon);
  const auto ci = cloud_index(Raster::from_data(2, 1, 1, {0.5f, 0.5f}), m, kNoon).ci;
  EXPECT_EQ(ci[0], 0.0);
  EXPECT_EQ(ci[1], 0.0);
}

TEST(CloudIndex, ClassBins) {
  EXPECT_EQ(ci_class(0.0), 0);
  EXPECT_EQ(ci_class(0.1999), 0);
  EXPECT_EQ(ci_class(0.2), 1);
  EXPECT_EQ(ci_class(0.5), 2);
  EXPECT_EQ(ci_class(0.79), 3);
  EXPECT_EQ(ci_class(0.8), 4);
  EXPECT_EQ(ci_class(1.0), 4);
  CloudIndexMap m{3, 1, 1, {0.0, 0.4, 1.0}, {}};
  EXPECT_THROW(class_raster(m), InvalidArgument);
  m = segment_ci(m);
  EXPECT_EQ(m.classes, (std::vector<std::uint8_t>{0, 2, 4}));
  const Raster cr = class_raster(m);
  EXPECT_FLOAT_EQ(cr.at(1, 0) * 255.0f, 100.0f);
}

// Property: joint gain/offset changes of frame and stack leave ci unchanged.
TEST(CloudIndex, AffineInvariance) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(s);
    auto grid = [&](float lo, float hi) {
      Raster r(6, 5, 1);
      for (float& v : r.data()) v = lo + (hi - lo) * static_cast<float>(rng.uniform_int(1024)) / 1024.0f;
      return r;
    };
    std::vector<Raster> stack;
    for (int d = 0; d < 4; ++d) stack.push_back(grid(0.0f, 0.5f));
    const Raster frame = grid(0.0f, 1.0f);
    auto score = [&](float gain, float offset) {
      BackgroundModel m(6, 5, 1, 10, 300);
      auto map = [&](Raster r) {
        for (float& v : r.data()) v = gain * v + offset;
        return r;
      };
      for (int d = 0; d < 4; ++d) m.update(map(stack[d]), day_at(d));
      m.update(map(frame), day_at(4));
      return cloud_index(map(frame), m, day_at(4)).ci;
    };
    const auto base = score(1.0f, 0.0f);
    for (auto [g, o] : {std::pair{0.5f, 0.25f}, {0.25f, 0.5f}, {0.75f, 0.125f}}) {
      const auto other = score(g, o);
      for (std::size_t i = 0; i < base.size(); ++i) ASSERT_NEAR(other[i], base[i], 1e-9);
    }
  }
}

// Property: raising one pixel (below the frame max) never lowers its ci.
TEST(CloudIndex, MonotoneInPixelValue) {
  Rng rng(77);
  BackgroundModel m(4, 4, 1, 10, 300);
  m.update(fixture::noise(4, 4, 1, 5), kNoon);
  Raster frame = fixture::noise(4, 4, 1, 6);
  frame.at(0, 0) = 1.0f;
  for (int k = 0; k < 200; ++k) {
    const int x = 1 + static_cast<int>(rng.uniform_int(3)), y = static_cast<int>(rng.uniform_int(4));
    const double before = cloud_index(frame, m, kNoon).ci[y * 4 + x];
    frame.at(x, y) = std::min(1.0f, frame.at(x, y) + 0.05f * static_cast<float>(rng.uniform01()));
    ASSERT_GE(cloud_index(frame, m, kNoon).ci[y * 4 + x], before);
  }
}

TEST(CloudIndex, LandSeaBoundaryInvisible) {
  BackgroundModel m(64, 64, 1, 10, 300);
  const Raster clear = render_frame(land_sea_scene(false), 0);
  for (int d = 0; d < 10; ++d) m.update(clear, day_at(d));
  const Raster cloudy = render_frame(land_sea_scene(true), 0);
  m.update(cloudy, day_at(10));
  const auto ci = cloud_index(cloudy, m, day_at(10)).ci;
  // Mirror pairs about x = 32 see the same cloud alpha over different albedo.
  double worst = 0;
  for (int y = 0; y < 64; ++y) {
    for (int dx = 1; dx < 31; ++dx) {
      const double sea = ci[y * 64 + (32 - dx)], land = ci[y * 64 + (32 + dx)];
      worst = std::max(worst, std::abs(sea - land));
    }
  }
  EXPECT_LE(worst, 1.0 / 255.0);
  EXPECT_EQ(ci[32 * 64 + 32], 1.0);
  EXPECT_NEAR(ci[2 * 64 + 2], 0.0, 1e-4);
}
