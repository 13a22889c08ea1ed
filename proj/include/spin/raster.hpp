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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spin/error.hpp"

namespace spin {

/// Continuous pixel coordinate. x grows rightward, y grows downward; integer
/// values land exactly on pixel centres.
struct PixelPoint {
  double x = 0.0;
  double y = 0.0;

  friend PixelPoint operator+(PixelPoint a, PixelPoint b) { return {a.x + b.x, a.y + b.y}; }
  friend PixelPoint operator-(PixelPoint a, PixelPoint b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(PixelPoint a, PixelPoint b) = default;
};

/// Row-major W x H x C grid of normalised samples in [0,1].
///
/// Channels are interleaved (`data[(y * width + x) * channels + c]`). Samples
/// that fall outside the frame read as `fill_value()`.
class Raster {
 public:
  Raster() = default;

  Raster(int width, int height, int channels, float init = 0.0f, float fill = 0.0f)
      : width_(width), height_(height), channels_(channels), fill_(fill) {
    if (width < 1 || height < 1 || channels < 1) {
      throw InvalidArgument("raster dimensions must be positive, got " + std::to_string(width) +
                            "x" + std::to_string(height) + "x" + std::to_string(channels));
    }
    data_.assign(static_cast<std::size_t>(width) * height * channels, init);
  }

  /// Adopts `data`; throws if its length or any value breaks the raster invariants.
  static Raster from_data(int width, int height, int channels, std::vector<float> data,
                          float fill = 0.0f) {
    Raster r(width, height, channels, 0.0f, fill);
    if (data.size() != r.data_.size()) {
      throw InvalidArgument("raster data length " + std::to_string(data.size()) +
                            " does not match " + std::to_string(r.data_.size()));
    }
    r.data_ = std::move(data);
    r.validate();
    return r;
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  float fill_value() const noexcept { return fill_; }
  void set_fill_value(float v) noexcept { fill_ = v; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<float> data() noexcept { return data_; }
  std::span<const float> data() const noexcept { return data_; }

  float& at(int x, int y, int c = 0) noexcept { return data_[index(x, y, c)]; }
  float at(int x, int y, int c = 0) const noexcept { return data_[index(x, y, c)]; }

  std::span<float> row(int y) noexcept {
    return std::span<float>(data_).subspan(static_cast<std::size_t>(y) * width_ * channels_,
                                           static_cast<std::size_t>(width_) * channels_);
  }
  std::span<const float> row(int y) const noexcept {
    return std::span<const float>(data_).subspan(static_cast<std::size_t>(y) * width_ * channels_,
                                                 static_cast<std::size_t>(width_) * channels_);
  }

  bool same_shape(const Raster& o) const noexcept {
    return width_ == o.width_ && height_ == o.height_ && channels_ == o.channels_;
  }

  /// Throws InvalidArgument unless every sample is finite and within [0,1].
  void validate() const {
    for (std::size_t i = 0; i < data_.size(); ++i) {
      const float v = data_[i];
      if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
        throw InvalidArgument("raster sample " + std::to_string(i) + " out of [0,1]: " +
                              std::to_string(v));
      }
    }
  }

  friend bool operator==(const Raster& a, const Raster& b) {
    return a.same_shape(b) && a.fill_ == b.fill_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  float fill_ = 0.0f;
  std::vector<float> data_;
};

/// Geometric centre used by every centred operation: (W/2, H/2).
inline PixelPoint image_center(const Raster& img) noexcept {
  return {img.width() / 2.0, img.height() / 2.0};
}

namespace detail {

// Bilinear blend at an in-range point; caller guarantees 0 <= x <= W-1, 0 <= y <= H-1.
inline double blend(const Raster& img, double x, double y, int channel) noexcept {
  const int x0 = static_cast<int>(x);
  const int y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, img.width() - 1);
  const int y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = img.at(x0, y0, channel) * (1.0 - fx) + img.at(x1, y0, channel) * fx;
  const double bot = img.at(x0, y1, channel) * (1.0 - fx) + img.at(x1, y1, channel) * fx;
  return top * (1.0 - fy) + bot * fy;
}

}  // namespace detail

/// Bilinear sample of `channel` at `p`; points outside [0,W-1] x [0,H-1] read
/// as the fill value.
inline double sample_bilinear(const Raster& img, PixelPoint p, int channel) {
  if (channel < 0 || channel >= img.channels()) {
    throw InvalidArgument("channel " + std::to_string(channel) + " out of range");
  }
  if (!(p.x >= 0.0 && p.y >= 0.0 && p.x <= img.width() - 1 && p.y <= img.height() - 1)) {
    return img.fill_value();
  }
  return detail::blend(img, p.x, p.y, channel);
}

/// Samples every channel at `p` into `out` (size == channels).
inline void sample_pixel(const Raster& img, PixelPoint p, std::span<float> out) noexcept {
  if (!(p.x >= 0.0 && p.y >= 0.0 && p.x <= img.width() - 1 && p.y <= img.height() - 1)) {
    std::fill(out.begin(), out.end(), img.fill_value());
    return;
  }
  for (int c = 0; c < img.channels(); ++c) {
    out[c] = static_cast<float>(detail::blend(img, p.x, p.y, c));
  }
}

/// Inverse-mapped resample. Output pixel (i, j) reads the source at
/// (i * W/new_w, j * H/new_h), clamped to the frame, so resizing to the same
/// shape is exact and a 2x up/down round trip lands on lattice points.
inline Raster resize(const Raster& img, int new_w, int new_h) {
  if (new_w < 1 || new_h < 1) {
    throw InvalidArgument("resize target must be at least 1x1, got " + std::to_string(new_w) +
                          "x" + std::to_string(new_h));
  }
  if (new_w == img.width() && new_h == img.height()) return img;

  Raster out(new_w, new_h, img.channels(), 0.0f, img.fill_value());
  const double sx = static_cast<double>(img.width()) / new_w;
  const double sy = static_cast<double>(img.height()) / new_h;
  const double xmax = img.width() - 1;
  const double ymax = img.height() - 1;
  for (int j = 0; j < new_h; ++j) {
    const double y = std::min(j * sy, ymax);
    for (int i = 0; i < new_w; ++i) {
      const double x = std::min(i * sx, xmax);
      for (int c = 0; c < img.channels(); ++c) {
        out.at(i, j, c) = static_cast<float>(detail::blend(img, x, y, c));
      }
    }
  }
  return out;
}

/// Window of out_w x out_h whose pixel (i, j) samples the source at
/// center + (i - out_w/2, j - out_h/2). Regions off the source are fill.
inline Raster crop_centered(const Raster& img, PixelPoint center, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) {
    throw InvalidArgument("crop size must be at least 1x1");
  }
  Raster out(out_w, out_h, img.channels(), 0.0f, img.fill_value());
  const double ox = center.x - out_w / 2.0;
  const double oy = center.y - out_h / 2.0;
  for (int j = 0; j < out_h; ++j) {
    for (int i = 0; i < out_w; ++i) {
      sample_pixel(img, {ox + i, oy + j},
                   out.data().subspan((static_cast<std::size_t>(j) * out_w + i) * img.channels(),
                                      img.channels()));
    }
  }
  return out;
}

/// Mean absolute difference over every sample of two same-shape rasters.
inline double mean_abs_diff(const Raster& a, const Raster& b) {
  if (!a.same_shape(b)) throw InvalidArgument("mean_abs_diff: shape mismatch");
  double acc = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) acc += std::abs(double(da[i]) - double(db[i]));
  return acc / static_cast<double>(da.size());
}

}  // namespace spin
