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

// Reference samplers for the polar transform: evaluate a continuous scene
// function directly at polar coordinates, with no intermediate raster.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

using Field = std::function<double(double x, double y)>;

/// theta = 0 looks down the +y axis, theta grows screen-clockwise.
inline double polar_sample(const Field& f, double cx, double cy, double r, double theta_rad) {
  return f(cx - r * std::sin(theta_rad), cy + r * std::cos(theta_rad));
}

/// Band-limited field: a sum of a few low-frequency cosines, values in [0,1].
inline Field smooth_field(double fx1, double fy1, double fx2, double fy2, double phase) {
  return [=](double x, double y) {
    const double v = 0.5 + 0.25 * std::cos(fx1 * x + fy1 * y + phase) + 0.2 * std::cos(fx2 * x - fy2 * y);
    return v;
  };
}

}  // namespace oracle
