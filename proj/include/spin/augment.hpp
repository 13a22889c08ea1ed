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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spin/error.hpp"
#include "spin/geometry.hpp"
#include "spin/raster.hpp"
#include "spin/rng.hpp"
#include "spin/time.hpp"

namespace spin {

enum class AugmentKind { none, rotation, polar_translation, vertical_flip, temporal_flip };

inline std::string_view to_string(AugmentKind k) {
  switch (k) {
    case AugmentKind::none: return "none";
    case AugmentKind::rotation: return "rotation";
    case AugmentKind::polar_translation: return "polar_translation";
    case AugmentKind::vertical_flip: return "vertical_flip";
    case AugmentKind::temporal_flip: return "temporal_flip";
  }
  return "none";
}

inline AugmentKind parse_augment_kind(std::string_view s) {
  for (auto k : {AugmentKind::none, AugmentKind::rotation, AugmentKind::polar_translation,
                 AugmentKind::vertical_flip, AugmentKind::temporal_flip}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown augmentation kind '" + std::string(s) + "'");
}

struct AugmentPolicy {
  AugmentKind kind = AugmentKind::none;
  double probability = 0.0;
  std::uint64_t rng_seed = 0;
  // Rotation pivot; the frame centre when unset.
  std::optional<PixelPoint> center;

  void validate() const {
    if (!(probability >= 0.0 && probability <= 1.0)) {
      throw InvalidArgument("augmentation probability must lie in [0,1]");
    }
  }
};

/// Ordered frames (oldest first) with matching timestamps.
///
/// `polar` marks frames that are polar grids (rows = angle). `reversed` is
/// toggled by temporal_flip: the frames then run backwards in physical time
/// while `timestamps` keep their increasing, evenly strided values.
struct FrameSequence {
  std::vector<Raster> frames;
  std::vector<Instant> timestamps;
  Seconds stride{0};
  bool polar = false;
  bool reversed = false;

  std::size_t size() const noexcept { return frames.size(); }

  void validate() const {
    if (frames.empty() || frames.size() != timestamps.size()) {
      throw InvalidArgument("frame sequence needs >= 1 frame and one timestamp per frame");
    }
    for (std::size_t i = 1; i < timestamps.size(); ++i) {
      if (timestamps[i] <= timestamps[i - 1]) {
        throw InvalidArgument("frame timestamps must be strictly increasing");
      }
    }
  }

  friend bool operator==(const FrameSequence&, const FrameSequence&) = default;
};

/// Screen-clockwise rotation by alpha degrees about `center` (a marker at
/// center + (r, 0) lands on center + (0, r) for alpha = 90).
inline Raster rotate_about(const Raster& img, PixelPoint center, double alpha_deg) {
  if (!std::isfinite(alpha_deg)) throw InvalidArgument("rotation angle must be finite");
  double turn = std::fmod(alpha_deg, 360.0);
  if (turn < 0.0) turn += 360.0;
  if (turn == 0.0) return img;
  // Quarter turns use exact coefficients so lattice points map onto lattice points.
  double ca, sa;
  if (turn == 90.0) {
    ca = 0.0;
    sa = 1.0;
  } else if (turn == 180.0) {
    ca = -1.0;
    sa = 0.0;
  } else if (turn == 270.0) {
    ca = 0.0;
    sa = -1.0;
  } else {
    const double a = turn * std::numbers::pi / 180.0;
    ca = std::cos(a);
    sa = std::sin(a);
  }
  Raster out(img.width(), img.height(), img.channels(), 0.0f, img.fill_value());
  const int ch = img.channels();
  for (int y = 0; y < img.height(); ++y) {
    const double dy = y - center.y;
    auto row = out.row(y);
    for (int x = 0; x < img.width(); ++x) {
      const double dx = x - center.x;
      // Inverse map: rotate the output offset by -alpha.
      const PixelPoint src{center.x + ca * dx + sa * dy, center.y - sa * dx + ca * dy};
      sample_pixel(img, src, row.subspan(static_cast<std::size_t>(x) * ch, ch));
    }
  }
  return out;
}

/// Cyclic shift of the angle rows by `shift_rows` (mod n_theta).
inline PolarRaster polar_translate(const PolarRaster& pimg, long shift_rows) {
  return {cyclic_row_shift(pimg.base, shift_rows), pimg.center, pimg.r_max};
}

inline Raster vertical_flip(const Raster& img) {
  Raster out = img;
  for (int y = 0; y < img.height(); ++y) {
    auto src = img.row(y);
    std::copy(src.begin(), src.end(), out.row(img.height() - 1 - y).begin());
  }
  return out;
}

/// Reverses the frame order. Timestamps keep their original increasing
/// values, so the stride is unchanged; `reversed` records the direction.
inline FrameSequence temporal_flip(const FrameSequence& seq) {
  FrameSequence out = seq;
  std::reverse(out.frames.begin(), out.frames.end());
  out.reversed = !seq.reversed;
  return out;
}

/// Physical instants that the prediction targets of `seq` refer to.
///
/// Forward sequences look ahead of their latest frame. A flipped sequence's
/// latest frame is the physically earliest one, and its targets point into
/// the past from there: horizons {2,..,10} min become -2..-10 min.
inline std::vector<Instant> target_instants(const FrameSequence& seq,
                                            std::span<const Seconds> horizons) {
  std::vector<Instant> out;
  out.reserve(horizons.size());
  for (Seconds h : horizons) {
    out.push_back(seq.reversed ? seq.timestamps.front() - h : seq.timestamps.back() + h);
  }
  return out;
}

/// Parameters drawn by one apply_policy call, for logging and manifests.
struct AppliedAugment {
  AugmentKind kind = AugmentKind::none;
  double rotation_deg = 0.0;
  long shift_rows = 0;
};

/// Builds the generator for the `index`-th sequence from the policy seeds.
inline Rng policy_rng(std::span<const AugmentPolicy> policies, std::uint64_t index) {
  std::uint64_t s = 0x5350494E;  // "SPIN"
  for (const auto& p : policies) s = mix_seed(s, p.rng_seed);
  return Rng(mix_seed(s, index));
}

/// Applies each policy independently with its probability. Geometric
/// parameters are drawn once and shared by every frame of the sequence.
inline FrameSequence apply_policy(const FrameSequence& seq, std::span<const AugmentPolicy> policies,
                                  Rng& draw, std::vector<AppliedAugment>* applied = nullptr) {
  seq.validate();
  for (const auto& p : policies) {
    p.validate();
    if (p.kind == AugmentKind::rotation && seq.polar) {
      throw InvalidArgument("rotation policy cannot act on polar frames");
    }
    if (p.kind == AugmentKind::polar_translation && !seq.polar) {
      throw InvalidArgument("polar_translation policy requires polar frames");
    }
  }

  FrameSequence out = seq;
  for (const auto& p : policies) {
    if (p.kind == AugmentKind::none) continue;
    if (!(draw.uniform01() < p.probability)) continue;
    AppliedAugment rec{p.kind};
    switch (p.kind) {
      case AugmentKind::rotation: {
        rec.rotation_deg = 360.0 * draw.uniform01();
        for (auto& f : out.frames) f = rotate_about(f, p.center.value_or(image_center(f)), rec.rotation_deg);
        break;
      }
      case AugmentKind::polar_translation: {
        rec.shift_rows = static_cast<long>(draw.uniform_int(static_cast<std::uint64_t>(out.frames.front().height())));
        for (auto& f : out.frames) f = cyclic_row_shift(f, rec.shift_rows);
        break;
      }
      case AugmentKind::vertical_flip:
        for (auto& f : out.frames) f = vertical_flip(f);
        break;
      case AugmentKind::temporal_flip:
        out = temporal_flip(out);
        break;
      case AugmentKind::none:
        break;
    }
    if (applied) applied->push_back(rec);
  }
  return out;
}

}  // namespace spin
