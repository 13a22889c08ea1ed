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

// Shared fixtures and small generators for the unit tests.

#include <filesystem>
#include <random>
#include <string>

#include "spin/raster.hpp"
#include "spin/rng.hpp"
#include "spin/synth.hpp"

namespace fixture {

/// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("spin_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline spin::Raster noise(int w, int h, int c, std::uint64_t seed) {
  spin::Rng rng(seed);
  spin::Raster r(w, h, c);
  for (float& v : r.data()) v = static_cast<float>(rng.uniform01());
  return r;
}

/// Values on the 1/255 grid, so PNG round trips are exact.
inline spin::Raster noise8(int w, int h, int c, std::uint64_t seed) {
  spin::Rng rng(seed);
  spin::Raster r(w, h, c);
  for (float& v : r.data()) v = static_cast<float>(rng.uniform_int(256)) / 255.0f;
  return r;
}

/// Single bright pixel on black.
inline spin::Raster marker(int w, int h, int x, int y) {
  spin::Raster r(w, h, 1);
  r.at(x, y) = 1.0f;
  return r;
}

/// Intensity-weighted centroid of channel 0.
inline spin::PixelPoint centroid(const spin::Raster& r) {
  double sx = 0, sy = 0, s = 0;
  for (int y = 0; y < r.height(); ++y) {
    for (int x = 0; x < r.width(); ++x) {
      const double v = r.at(x, y);
      sx += v * x;
      sy += v * y;
      s += v;
    }
  }
  return {sx / s, sy / s};
}

/// Smooth seeded sky: random_scene with clouds kept off the frame border.
inline spin::Raster smooth_scene(int size, std::uint64_t seed) {
  return spin::render_frame(spin::random_scene(size, seed), 0);
}

}  // namespace fixture
