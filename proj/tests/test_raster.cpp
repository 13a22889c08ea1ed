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

#include <cmath>
#include <fstream>

#include "spin/error.hpp"
#include "spin/image_io.hpp"
#include "spin/raster.hpp"
#include "support.hpp"

using namespace spin;

// Bilinear reference written directly from the four-neighbour formula.
static double bilinear_ref(const Raster& img, double x, double y, int c) {
  const int x0 = static_cast<int>(std::floor(x)), y0 = static_cast<int>(std::floor(y));
  const int x1 = std::min(x0 + 1, img.width() - 1), y1 = std::min(y0 + 1, img.height() - 1);
  const double ax = x - x0, ay = y - y0;
  return (1 - ax) * (1 - ay) * img.at(x0, y0, c) + ax * (1 - ay) * img.at(x1, y0, c) +
         (1 - ax) * ay * img.at(x0, y1, c) + ax * ay * img.at(x1, y1, c);
}

TEST(Raster, RejectsBadShapes) {
  EXPECT_THROW(Raster(0, 4, 1), InvalidArgument);
  EXPECT_THROW(Raster(4, 4, 0), InvalidArgument);
  EXPECT_THROW(Raster::from_data(2, 2, 1, {0.f, 0.f, 0.f}), InvalidArgument);
  EXPECT_THROW(Raster::from_data(1, 1, 1, {1.5f}), InvalidArgument);
  EXPECT_THROW(Raster::from_data(1, 1, 1, {NAN}), InvalidArgument);
}

TEST(Raster, InterleavedLayout) {
  auto r = Raster::from_data(2, 1, 3, {0.1f, 0.2f, 0.3f, 0.4f, 0.5f, 0.6f});
  EXPECT_FLOAT_EQ(r.at(1, 0, 2), 0.6f);
  EXPECT_FLOAT_EQ(r.at(0, 0, 1), 0.2f);
}

TEST(SampleBilinear, ConstantField) {
  Raster r(9, 7, 1, 0.5f);
  for (double x : {0.0, 0.3, 4.5, 7.99}) EXPECT_DOUBLE_EQ(sample_bilinear(r, {x, 2.25}, 0), 0.5);
}

TEST(SampleBilinear, ExactAtLattice) {
  const Raster r = fixture::noise(13, 11, 3, 1);
  for (int y = 0; y < r.height(); ++y) {
    for (int x = 0; x < r.width(); ++x) {
      for (int c = 0; c < 3; ++c) EXPECT_EQ(sample_bilinear(r, {double(x), double(y)}, c), r.at(x, y, c));
    }
  }
}

TEST(SampleBilinear, TwoByTwoCentre) {
  auto r = Raster::from_data(2, 2, 1, {0.f, 1.f, 0.f, 1.f});
  EXPECT_DOUBLE_EQ(sample_bilinear(r, {0.5, 0.5}, 0), 0.5);
}

TEST(SampleBilinear, OutOfBoundsIsFill) {
  Raster r(4, 4, 1, 0.7f, 0.25f);
  EXPECT_EQ(sample_bilinear(r, {-0.01, 1}, 0), 0.25f);
  EXPECT_EQ(sample_bilinear(r, {1, 3.0001}, 0), 0.25f);
  EXPECT_EQ(sample_bilinear(r, {3, 3}, 0), 0.7f);
  EXPECT_THROW(sample_bilinear(r, {1, 1}, 1), InvalidArgument);
}

TEST(SampleBilinear, MatchesReferenceOnRandomPoints) {
  const Raster r = fixture::noise(17, 9, 2, 2);
  Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    const double x = rng.uniform01() * 16, y = rng.uniform01() * 8;
    for (int c = 0; c < 2; ++c) EXPECT_NEAR(sample_bilinear(r, {x, y}, c), bilinear_ref(r, x, y, c), 1e-12);
  }
}

TEST(SampleBilinear, ContinuousAcrossCellEdges) {
  const Raster r = fixture::noise(8, 8, 1, 4);
  for (int x = 1; x < 7; ++x) {
    const double lo = sample_bilinear(r, {x - 1e-9, 3.3}, 0), hi = sample_bilinear(r, {x + 1e-9, 3.3}, 0);
    EXPECT_NEAR(lo, hi, 1e-8);
  }
}

TEST(Resize, IdentityAndErrors) {
  const Raster r = fixture::noise(128, 128, 1, 5);
  EXPECT_EQ(resize(r, 128, 128), r);
  EXPECT_THROW(resize(r, 0, 5), InvalidArgument);
}

TEST(Resize, ConstantStaysConstant) {
  Raster r(31, 17, 3, 0.375f);
  for (auto [w, h] : {std::pair{5, 9}, {64, 64}, {1, 1}, {100, 3}}) {
    const Raster o = resize(r, w, h);
    ASSERT_EQ(o.width(), w);
    for (float v : o.data()) EXPECT_FLOAT_EQ(v, 0.375f);
  }
}

TEST(Resize, CroppedSensorFrameToModelInput) {
  Raster full(1024, 768, 3, 0.2f);
  const Raster sq = crop_centered(full, image_center(full), 768, 768);
  const Raster o = resize(sq, 128, 128);
  EXPECT_EQ(o.width(), 128);
  EXPECT_EQ(o.height(), 128);
  EXPECT_EQ(o.channels(), 3);
}

TEST(Resize, DoubleRoundTripOnSmoothScenes) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Raster img = fixture::smooth_scene(64, s);
    const Raster back = resize(resize(img, 128, 128), 64, 64);
    EXPECT_LE(mean_abs_diff(img, back), 1.0 / 255.0);
  }
}

TEST(Resize, HalvingSamplesEvenLattice) {
  const Raster img = fixture::noise(16, 16, 1, 6);
  const Raster half = resize(img, 8, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) EXPECT_EQ(half.at(x, y), img.at(2 * x, 2 * y));
  }
}

TEST(CropCentered, FullSizeIsIdentity) {
  const Raster img = fixture::noise(32, 24, 3, 7);
  EXPECT_EQ(crop_centered(img, image_center(img), 32, 24), img);
}

TEST(CropCentered, MiddleQuarter) {
  const Raster img = fixture::noise(128, 128, 1, 8);
  const Raster c = crop_centered(img, {64, 64}, 64, 64);
  for (int j = 0; j < 64; ++j) {
    for (int i = 0; i < 64; ++i) ASSERT_EQ(c.at(i, j), img.at(32 + i, 32 + j));
  }
}

TEST(CropCentered, CornerLeavesThreeQuadrantsFill) {
  Raster img(20, 20, 1, 0.9f, 0.0f);
  const Raster c = crop_centered(img, {0, 0}, 20, 20);
  for (int j = 0; j < 20; ++j) {
    for (int i = 0; i < 20; ++i) {
      const bool inside = i >= 10 && j >= 10;
      EXPECT_EQ(c.at(i, j), inside ? 0.9f : 0.0f) << i << "," << j;
    }
  }
}

TEST(ImageIo, PngRoundTripGrayAndRgb) {
  const auto dir = fixture::scratch("png");
  for (int c : {1, 3}) {
    const Raster img = fixture::noise8(23, 17, c, 9 + c);
    const auto p = dir / ("x" + std::to_string(c) + ".png");
    io::save_png(img, p);
    EXPECT_EQ(io::load_png(p), img);
  }
}

TEST(ImageIo, RawRoundTripIsBitExact) {
  const auto dir = fixture::scratch("raw");
  const Raster img = fixture::noise(19, 5, 3, 11);
  io::save_raw(img, dir / "a.raw");
  EXPECT_EQ(io::load_raw(dir / "a.raw"), img);
}

TEST(ImageIo, UnreadableInputsAreDataErrors) {
  const auto dir = fixture::scratch("bad");
  EXPECT_THROW(io::load_png(dir / "missing.png"), DataError);
  std::ofstream(dir / "junk.png") << "not a png";
  EXPECT_THROW(io::load_png(dir / "junk.png"), DataError);
  std::ofstream(dir / "junk.raw") << "SPINRAW1";
  EXPECT_THROW(io::load_raw(dir / "junk.raw"), DataError);
}
