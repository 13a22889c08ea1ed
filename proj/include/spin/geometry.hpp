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
#include <numbers>
#include <string>
#include <vector>

#include "spin/error.hpp"
#include "spin/raster.hpp"

namespace spin {

/// Radius x angle unwrapping of a Cartesian raster about a centre.
///
/// `base` rows index the polar angle, columns index the radius:
///   row k    <-> theta_k = k * 360 / n_theta degrees
///   column j <-> r_j     = j * r_max / (n_r - 1) pixels
/// theta = 0 points straight down (+y) and theta grows clockwise on screen, so
/// the source point of (k, j) is center + r_j * (-sin theta_k, cos theta_k).
/// With this orientation a screen-clockwise rotation of the scene by alpha is
/// a cyclic shift of the rows by +alpha * n_theta / 360.
struct PolarRaster {
  Raster base;
  PixelPoint center;
  double r_max = 0.0;

  int n_theta() const noexcept { return base.height(); }
  int n_r() const noexcept { return base.width(); }

  friend bool operator==(const PolarRaster&, const PolarRaster&) = default;
};

/// Sun centre in image coordinates plus whether it lies inside the frame.
struct SunPixel {
  PixelPoint position;
  bool visible = true;
};

/// Source-frame direction of polar angle `theta_rad` (unit vector).
inline PixelPoint polar_direction(double theta_rad) noexcept {
  return {-std::sin(theta_rad), std::cos(theta_rad)};
}

/// Unwraps `img` about `center`. r_max defaults to half the image width.
inline PolarRaster polar_unwrap(const Raster& img, PixelPoint center, int n_r, int n_theta,
                                double r_max = 0.0) {
  if (n_r < 2 || n_theta < 2) {
    throw InvalidArgument("polar_unwrap needs n_r, n_theta >= 2, got " + std::to_string(n_r) +
                          ", " + std::to_string(n_theta));
  }
  if (r_max <= 0.0) r_max = img.width() / 2.0;

  PolarRaster out{Raster(n_r, n_theta, img.channels(), 0.0f, img.fill_value()), center, r_max};
  const double dr = r_max / (n_r - 1);
  const int ch = img.channels();
  for (int k = 0; k < n_theta; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_theta;
    const PixelPoint u = polar_direction(theta);
    auto row = out.base.row(k);
    for (int j = 0; j < n_r; ++j) {
      const double r = j * dr;
      sample_pixel(img, {center.x + r * u.x, center.y + r * u.y},
                   row.subspan(static_cast<std::size_t>(j) * ch, ch));
    }
  }
  return out;
}

namespace detail {

// Bilinear read from a polar grid: rows wrap modulo n_theta, columns clamp.
inline void sample_polar(const Raster& base, double row, double col, std::span<float> out) noexcept {
  const int n = base.height();
  double fr = std::fmod(row, static_cast<double>(n));
  if (fr < 0.0) fr += n;
  int r0 = static_cast<int>(fr);
  const double ty = fr - r0;
  if (r0 >= n) r0 = n - 1;
  const int r1 = (r0 + 1) % n;
  const double c = std::clamp(col, 0.0, static_cast<double>(base.width() - 1));
  const int c0 = static_cast<int>(c);
  const int c1 = std::min(c0 + 1, base.width() - 1);
  const double tx = c - c0;
  for (int ch = 0; ch < base.channels(); ++ch) {
    const double top = base.at(c0, r0, ch) * (1.0 - tx) + base.at(c1, r0, ch) * tx;
    const double bot = base.at(c0, r1, ch) * (1.0 - tx) + base.at(c1, r1, ch) * tx;
    out[ch] = static_cast<float>(top * (1.0 - ty) + bot * ty);
  }
}

}  // namespace detail

/// Maps a polar grid back to an out_w x out_h Cartesian raster about
/// `pimg.center`. Pixels beyond r_max are fill.
inline Raster polar_rewrap(const PolarRaster& pimg, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw InvalidArgument("polar_rewrap: empty output");
  if (pimg.r_max <= 0.0 || pimg.n_r() < 2 || pimg.n_theta() < 2) {
    throw InvalidArgument("polar_rewrap: malformed polar raster");
  }
  const Raster& base = pimg.base;
  Raster out(out_w, out_h, base.channels(), base.fill_value(), base.fill_value());
  const double rows_per_rad = pimg.n_theta() / (2.0 * std::numbers::pi);
  const double cols_per_px = (pimg.n_r() - 1) / pimg.r_max;
  const int ch = base.channels();
  for (int y = 0; y < out_h; ++y) {
    auto row = out.row(y);
    for (int x = 0; x < out_w; ++x) {
      const double dx = x - pimg.center.x;
      const double dy = y - pimg.center.y;
      const double r = std::hypot(dx, dy);
      if (r > pimg.r_max) continue;
      double theta = std::atan2(-dx, dy);
      if (theta < 0.0) theta += 2.0 * std::numbers::pi;
      detail::sample_polar(base, theta * rows_per_rad, r * cols_per_px,
                           row.subspan(static_cast<std::size_t>(x) * ch, ch));
    }
  }
  return out;
}

/// Resamples a polar grid to out_w x out_h, interpolating across the
/// 360 -> 0 degree seam.
inline Raster resize_polar(const PolarRaster& pimg, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw InvalidArgument("resize_polar: empty output");
  const Raster& base = pimg.base;
  if (out_w == base.width() && out_h == base.height()) return base;
  Raster out(out_w, out_h, base.channels(), 0.0f, base.fill_value());
  const double sy = static_cast<double>(base.height()) / out_h;
  const double sx = static_cast<double>(base.width()) / out_w;
  const int ch = base.channels();
  for (int y = 0; y < out_h; ++y) {
    auto row = out.row(y);
    for (int x = 0; x < out_w; ++x) {
      detail::sample_polar(base, y * sy, x * sx, row.subspan(static_cast<std::size_t>(x) * ch, ch));
    }
  }
  return out;
}

/// Cyclic shift of rows: output row k is input row (k - shift) mod H.
inline Raster cyclic_row_shift(const Raster& img, long shift) {
  const long h = img.height();
  long s = shift % h;
  if (s < 0) s += h;
  if (s == 0) return img;
  Raster out(img.width(), img.height(), img.channels(), 0.0f, img.fill_value());
  for (long k = 0; k < h; ++k) {
    auto src = img.row(static_cast<int>((k - s + h) % h));
    std::copy(src.begin(), src.end(), out.row(static_cast<int>(k)).begin());
  }
  return out;
}

/// Translation that puts the sun at image_center(img); vacated pixels are fill.
inline Raster center_on_sun(const Raster& img, const SunPixel& sun) {
  const PixelPoint c = image_center(img);
  const PixelPoint off = sun.position - c;
  Raster out(img.width(), img.height(), img.channels(), 0.0f, img.fill_value());
  const int ch = img.channels();
  for (int y = 0; y < img.height(); ++y) {
    auto row = out.row(y);
    for (int x = 0; x < img.width(); ++x) {
      sample_pixel(img, {x + off.x, y + off.y}, row.subspan(static_cast<std::size_t>(x) * ch, ch));
    }
  }
  return out;
}

/// 2x close-up: the W/2 x H/2 window about `center`, resized back to W x H.
inline Raster circumsolar_closeup(const Raster& img, PixelPoint center) {
  const Raster window = crop_centered(img, center, std::max(1, img.width() / 2),
                                      std::max(1, img.height() / 2));
  return resize(window, img.width(), img.height());
}

/// Default intermediate grid of the SPIN pipeline.
struct SpinGrid {
  int n_r = 0;        // 0 -> W/2
  int n_theta = 360;
  int out_w = 128;
  int out_h = 128;
};

/// Full SPIN pipeline: unwrap about `center` onto an (n_theta x n_r) grid,
/// then resample to out_h x out_w.
inline Raster spin_transform(const Raster& img, PixelPoint center, const SpinGrid& grid = {}) {
  const int n_r = grid.n_r > 0 ? grid.n_r : std::max(2, img.width() / 2);
  return resize_polar(polar_unwrap(img, center, n_r, grid.n_theta), grid.out_w, grid.out_h);
}

}  // namespace spin
