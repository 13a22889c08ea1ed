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

// Analytic test scenes: a sun disk and Gaussian cloud blobs over a smooth sky
// gradient (or a two-albedo ground for satellite-style frames). Every pixel
// is a closed-form function of the scene parameters, so transformed variants
// can be re-rendered exactly instead of resampled.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "spin/augment.hpp"
#include "spin/error.hpp"
#include "spin/raster.hpp"
#include "spin/rng.hpp"
#include "spin/solar.hpp"
#include "spin/time.hpp"

namespace spin {

struct SunDisk {
  PixelPoint center{64.0, 64.0};
  double radius = 4.0;
  double intensity = 1.0;  // 0 disables the disk
};

/// Gaussian opacity blob. alpha = min(1, opacity * exp(-d' S^-1 d / 2)), so an
/// opacity above 1 gives a fully opaque core.
struct CloudBlob {
  PixelPoint center;
  double sxx = 25.0, sxy = 0.0, syy = 25.0;  // covariance, px^2
  double opacity = 0.6;
  PixelPoint velocity;  // px per frame
  double brightness = 1.0;

  double alpha_at(PixelPoint p, int frame) const noexcept {
    const double dx = p.x - (center.x + velocity.x * frame);
    const double dy = p.y - (center.y + velocity.y * frame);
    const double det = sxx * syy - sxy * sxy;
    const double q = (syy * dx * dx - 2.0 * sxy * dx * dy + sxx * dy * dy) / det;
    return std::min(1.0, opacity * std::exp(-0.5 * q));
  }
};

/// Smooth radial sky: outer + (inner - outer) * exp(-d^2 / (2 radius^2)).
struct SkyGradient {
  PixelPoint center{64.0, 64.0};
  double inner = 0.55;
  double outer = 0.25;
  double radius = 60.0;
};

/// Two-level ground albedo split by the vertical line x = boundary_x (sea on
/// the left). Replaces the sky gradient when present.
struct LandSeaMask {
  double boundary_x = 64.0;
  double sea_albedo = 0.08;
  double land_albedo = 0.30;
};

struct SceneSpec {
  int width = 128;
  int height = 128;
  int channels = 1;
  SunDisk sun;
  std::vector<CloudBlob> clouds;
  SkyGradient background;
  std::optional<LandSeaMask> land_sea;
  std::uint64_t seed = 0;

  // Time axis and site for render_irradiance / sequence timestamps.
  Instant start = parse_utc("2019-06-21T10:00:00Z");
  Seconds cadence{120};
  Site site{48.713, 2.208};

  void validate() const {
    if (width < 1 || height < 1) throw InvalidArgument("scene size must be positive");
    if (channels != 1 && channels != 3) throw InvalidArgument("scene channels must be 1 or 3");
    if (cadence.count() <= 0) throw InvalidArgument("scene cadence must be positive");
    for (const auto& b : clouds) {
      if (!(b.sxx > 0.0 && b.syy > 0.0 && b.sxx * b.syy - b.sxy * b.sxy > 0.0)) {
        throw InvalidArgument("cloud covariance must be positive definite");
      }
    }
  }
};

namespace detail {

inline constexpr double kSunEdge = 1.5;  // half-width of the sun limb ramp, px

inline double smoothstep01(double t) noexcept {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// Sky tint per channel for RGB scenes.
inline constexpr double kSkyTint[3] = {0.62, 0.78, 1.0};

}  // namespace detail

/// Combined cloud opacity 1 - prod(1 - alpha_i) at p.
inline double cloud_cover_at(const SceneSpec& spec, PixelPoint p, int frame) noexcept {
  double clear = 1.0;
  for (const auto& b : spec.clouds) clear *= 1.0 - b.alpha_at(p, frame);
  return 1.0 - clear;
}

/// Closed-form value of channel c at p in frame `frame`.
inline double scene_value(const SceneSpec& spec, PixelPoint p, int frame, int c) noexcept {
  double v;
  if (spec.land_sea) {
    v = p.x < spec.land_sea->boundary_x ? spec.land_sea->sea_albedo : spec.land_sea->land_albedo;
  } else {
    const auto& g = spec.background;
    const double d2 = (p.x - g.center.x) * (p.x - g.center.x) + (p.y - g.center.y) * (p.y - g.center.y);
    v = g.outer + (g.inner - g.outer) * std::exp(-d2 / (2.0 * g.radius * g.radius));
    if (spec.channels == 3) v *= detail::kSkyTint[c];
  }
  if (spec.sun.intensity > 0.0) {
    const double d = std::hypot(p.x - spec.sun.center.x, p.y - spec.sun.center.y);
    const double s = spec.sun.intensity *
                     detail::smoothstep01((spec.sun.radius + detail::kSunEdge - d) / (2.0 * detail::kSunEdge));
    v += s * (1.0 - v);
  }
  for (const auto& b : spec.clouds) {
    const double a = b.alpha_at(p, frame);
    v = v * (1.0 - a) + a * b.brightness;
  }
  return std::clamp(v, 0.0, 1.0);
}

inline Raster render_frame(const SceneSpec& spec, int frame) {
  spec.validate();
  Raster out(spec.width, spec.height, spec.channels);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      for (int c = 0; c < spec.channels; ++c) {
        out.at(x, y, c) = static_cast<float>(scene_value(spec, {double(x), double(y)}, frame, c));
      }
    }
  }
  return out;
}

/// Frames 0..n_frames-1 at spec.start + k * cadence; blobs advance by their velocity each frame.
inline FrameSequence render_sequence(const SceneSpec& spec, int n_frames) {
  if (n_frames < 1) throw InvalidArgument("render_sequence needs n_frames >= 1");
  FrameSequence seq;
  seq.stride = spec.cadence;
  for (int k = 0; k < n_frames; ++k) {
    seq.frames.push_back(render_frame(spec, k));
    seq.timestamps.push_back(spec.start + k * spec.cadence);
  }
  return seq;
}

/// Mean cloud cover over the sun disk (radius sun.radius) in frame `frame`.
inline double sun_occlusion(const SceneSpec& spec, int frame, int samples_per_axis = 25) {
  if (spec.clouds.empty()) return 0.0;
  const double r = spec.sun.radius;
  double acc = 0.0;
  int count = 0;
  for (int iy = 0; iy < samples_per_axis; ++iy) {
    for (int ix = 0; ix < samples_per_axis; ++ix) {
      const double ox = r * (2.0 * (ix + 0.5) / samples_per_axis - 1.0);
      const double oy = r * (2.0 * (iy + 0.5) / samples_per_axis - 1.0);
      if (ox * ox + oy * oy > r * r) continue;
      acc += cloud_cover_at(spec, {spec.sun.center.x + ox, spec.sun.center.y + oy}, frame);
      ++count;
    }
  }
  return count ? acc / count : 0.0;
}

/// Synthetic GHI = clear-sky fallback x (1 - sun occlusion), one sample per frame.
inline IrradianceSeries render_irradiance(const SceneSpec& spec, int series_len) {
  spec.validate();
  IrradianceSeries s;
  for (int k = 0; k < series_len; ++k) {
    const Instant t = spec.start + k * spec.cadence;
    const double clear = clearsky_fallback(solar_position(t, spec.site));
    s.timestamps.push_back(t);
    s.ghi_clearsky.push_back(clear);
    s.ghi.push_back(clear * (1.0 - sun_occlusion(spec, k)));
  }
  return s;
}

/// The same scene rotated screen-clockwise by alpha degrees about `pivot`
/// (matching rotate_about): every centre, covariance and velocity is rotated.
inline SceneSpec rotate_scene(SceneSpec spec, PixelPoint pivot, double alpha_deg) {
  const double a = alpha_deg * std::numbers::pi / 180.0;
  const double ca = std::cos(a), sa = std::sin(a);
  auto rot = [&](PixelPoint v) { return PixelPoint{ca * v.x - sa * v.y, sa * v.x + ca * v.y}; };
  auto rot_about = [&](PixelPoint p) { return pivot + rot(p - pivot); };
  spec.sun.center = rot_about(spec.sun.center);
  spec.background.center = rot_about(spec.background.center);
  for (auto& b : spec.clouds) {
    b.center = rot_about(b.center);
    b.velocity = rot(b.velocity);
    // R S R^T
    const double xx = ca * ca * b.sxx - 2 * ca * sa * b.sxy + sa * sa * b.syy;
    const double yy = sa * sa * b.sxx + 2 * ca * sa * b.sxy + ca * ca * b.syy;
    const double xy = ca * sa * (b.sxx - b.syy) + (ca * ca - sa * sa) * b.sxy;
    b.sxx = xx;
    b.syy = yy;
    b.sxy = xy;
  }
  return spec;
}

/// Seeded random sky scene: sun near the frame centre, `n_clouds` smooth
/// blobs inside the central disk.
inline SceneSpec random_scene(int size, std::uint64_t seed, int n_clouds = 6, int channels = 1) {
  Rng rng(mix_seed(seed, 0x53594E54));
  SceneSpec s;
  s.width = s.height = size;
  s.channels = channels;
  s.seed = seed;
  const PixelPoint c{size / 2.0, size / 2.0};
  const double R = size / 2.0;
  s.background = {c, 0.45 + 0.2 * rng.uniform01(), 0.15 + 0.1 * rng.uniform01(), 0.5 * R + 0.4 * R * rng.uniform01()};
  s.sun = {c + PixelPoint{0.2 * R * (rng.uniform01() - 0.5), 0.2 * R * (rng.uniform01() - 0.5)},
           0.05 * size + 0.03 * size * rng.uniform01(), 0.9};
  for (int k = 0; k < n_clouds; ++k) {
    const double rr = 0.75 * R * std::sqrt(rng.uniform01());
    const double th = 2.0 * std::numbers::pi * rng.uniform01();
    CloudBlob b;
    b.center = c + PixelPoint{rr * std::cos(th), rr * std::sin(th)};
    const double sx = 0.04 * size + 0.06 * size * rng.uniform01();
    const double sy = 0.04 * size + 0.06 * size * rng.uniform01();
    const double rho = 0.6 * (rng.uniform01() - 0.5);
    b.sxx = sx * sx;
    b.syy = sy * sy;
    b.sxy = rho * sx * sy;
    b.opacity = 0.3 + 0.6 * rng.uniform01();
    b.velocity = {2.0 * (rng.uniform01() - 0.5), 2.0 * (rng.uniform01() - 0.5)};
    b.brightness = 0.85 + 0.15 * rng.uniform01();
    s.clouds.push_back(b);
  }
  return s;
}

}  // namespace spin
