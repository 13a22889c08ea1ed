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

// PNG (8-bit grey / RGB) and raw float grid I/O for Raster.

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "spin/error.hpp"
#include "spin/raster.hpp"

namespace spin::io {

namespace detail {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] inline void png_fail(png_structp png, png_const_charp msg) {
  auto* err = static_cast<std::string*>(png_get_error_ptr(png));
  if (err) *err = msg;
  std::longjmp(png_jmpbuf(png), 1);
}

inline void png_warn(png_structp, png_const_charp) {}

inline std::uint8_t quantize(float v) noexcept {
  const float c = std::clamp(v, 0.0f, 1.0f);
  return static_cast<std::uint8_t>(std::lround(c * 255.0f));
}

}  // namespace detail

/// Loads an 8-bit PNG as a 1-channel (grey) or 3-channel (RGB) raster, values / 255.
/// Palette, 16-bit and alpha inputs are normalised to those two layouts.
inline Raster load_png(const std::filesystem::path& path) {
  detail::FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw IoError("cannot open " + path.string());

  std::string err;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err, detail::png_fail,
                                           detail::png_warn);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  std::vector<png_byte> pixels;
  std::vector<png_bytep> rows;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("failed to decode " + path.string() + ": " + err);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  const png_byte color = png_get_color_type(png, info);
  if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
  }
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  const int ch = png_get_channels(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  pixels.resize(stride * h);
  rows.resize(h);
  for (int y = 0; y < h; ++y) rows[y] = pixels.data() + stride * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  if (ch != 1 && ch != 3) {
    throw IoError(path.string() + ": unsupported channel count " + std::to_string(ch));
  }
  Raster out(w, h, ch);
  auto data = out.data();
  for (int y = 0; y < h; ++y) {
    for (int i = 0; i < w * ch; ++i) {
      data[static_cast<std::size_t>(y) * w * ch + i] = rows[y][i] / 255.0f;
    }
  }
  return out;
}

/// Writes a 1- or 3-channel raster as an 8-bit PNG (round(v * 255)).
inline void save_png(const Raster& img, const std::filesystem::path& path) {
  if (img.channels() != 1 && img.channels() != 3) {
    throw InvalidArgument("save_png supports 1 or 3 channels, got " +
                          std::to_string(img.channels()));
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  detail::FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw IoError("cannot create " + path.string());

  std::string err;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err, detail::png_fail,
                                            detail::png_warn);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);

  const int w = img.width();
  const int h = img.height();
  const int ch = img.channels();
  std::vector<png_byte> pixels(static_cast<std::size_t>(w) * h * ch);
  auto data = img.data();
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = detail::quantize(data[i]);
  std::vector<png_bytep> rows(h);
  for (int y = 0; y < h; ++y) rows[y] = pixels.data() + static_cast<std::size_t>(y) * w * ch;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed to encode " + path.string() + ": " + err);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, w, h, 8, ch == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// Raw float grid: "SPINRAW1", then uint32 width, height, channels, then
// width*height*channels little-endian float32 samples, row-major interleaved.
inline constexpr char kRawMagic[8] = {'S', 'P', 'I', 'N', 'R', 'A', 'W', '1'};

inline void save_raw(const Raster& img, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot create " + path.string());
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(img.width()),
                                 static_cast<std::uint32_t>(img.height()),
                                 static_cast<std::uint32_t>(img.channels())};
  os.write(kRawMagic, sizeof kRawMagic);
  os.write(reinterpret_cast<const char*>(dims), sizeof dims);
  os.write(reinterpret_cast<const char*>(img.data().data()),
           static_cast<std::streamsize>(img.size() * sizeof(float)));
  if (!os) throw IoError("write failed for " + path.string());
}

inline Raster load_raw(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  char magic[8];
  std::uint32_t dims[3];
  is.read(magic, sizeof magic);
  is.read(reinterpret_cast<char*>(dims), sizeof dims);
  if (!is || std::memcmp(magic, kRawMagic, sizeof magic) != 0) {
    throw IoError(path.string() + " is not a raw float grid");
  }
  std::vector<float> data(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2]);
  is.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(data.size() * sizeof(float)));
  if (!is) throw IoError(path.string() + ": truncated raw grid");
  return Raster::from_data(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                           static_cast<int>(dims[2]), std::move(data));
}

}  // namespace spin::io
