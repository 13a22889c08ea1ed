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
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "spin/error.hpp"
#include "spin/raster.hpp"
#include "spin/time.hpp"

namespace spin {

/// Per-pixel clear-ground reference: for each time-of-day slot, the
/// elementwise minimum of the frames seen at that slot over the last
/// `n_days` days (today included).
class BackgroundModel {
 public:
  struct Entry {
    long day = 0;
    std::vector<float> frame;
  };
  struct Slot {
    std::deque<Entry> history;  // ascending day
    std::vector<float> p_min;
  };

  BackgroundModel() = default;
  BackgroundModel(int width, int height, int channels, int n_days = 10, int slot_resolution_s = 300)
      : width_(width), height_(height), channels_(channels), n_days_(n_days), slot_res_(slot_resolution_s) {
    if (width < 1 || height < 1 || channels < 1) throw InvalidArgument("background geometry must be positive");
    if (n_days < 1) throw InvalidArgument("background window must span >= 1 day");
    if (slot_resolution_s < 1 || 86400 % slot_resolution_s != 0) {
      throw InvalidArgument("slot resolution must divide one day");
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  int n_days() const noexcept { return n_days_; }
  int slot_resolution() const noexcept { return slot_res_; }
  int slots_per_day() const noexcept { return 86400 / slot_res_; }
  const std::map<int, Slot>& slots() const noexcept { return slots_; }

  /// Nearest cadence-aligned slot of t's time of day.
  int slot_of(Instant t) const {
    const long sod = seconds_of_day(t);
    const long s = (sod + slot_res_ / 2) / slot_res_;
    return static_cast<int>(s % slots_per_day());
  }

  bool has_slot(Instant t) const { return slots_.count(slot_of(t)) > 0; }

  /// p_min for the slot of t; throws MissingBackground if never populated.
  const std::vector<float>& p_min(Instant t) const {
    auto it = slots_.find(slot_of(t));
    if (it == slots_.end()) {
      throw MissingBackground("no background for time-of-day slot of " + format_utc(t));
    }
    return it->second.p_min;
  }

  bool matches(const Raster& frame) const noexcept {
    return frame.width() == width_ && frame.height() == height_ && frame.channels() == channels_;
  }

  /// Adds `frame` observed at t. Frames older than the window relative to the
  /// newest day already held for the slot are ignored; a second frame for the
  /// same day and slot replaces the first.
  void update(const Raster& frame, Instant t) {
    if (!matches(frame)) {
      throw InvalidArgument("frame geometry " + std::to_string(frame.width()) + "x" +
                            std::to_string(frame.height()) + "x" + std::to_string(frame.channels()) +
                            " does not match background model");
    }
    const long day = day_number(t);
    Slot& slot = slots_[slot_of(t)];
    if (!slot.history.empty() && day <= slot.history.back().day - n_days_) return;

    Entry e{day, std::vector<float>(frame.data().begin(), frame.data().end())};
    auto pos = std::find_if(slot.history.begin(), slot.history.end(),
                            [&](const Entry& x) { return x.day >= day; });
    if (pos != slot.history.end() && pos->day == day) {
      *pos = std::move(e);
    } else {
      slot.history.insert(pos, std::move(e));
    }
    const long newest = slot.history.back().day;
    while (slot.history.front().day <= newest - n_days_) slot.history.pop_front();
    recompute(slot);
  }

  void save(const std::filesystem::path& path) const;
  static BackgroundModel load(const std::filesystem::path& path);

 private:
  static void recompute(Slot& slot) {
    slot.p_min = slot.history.front().frame;
    for (std::size_t k = 1; k < slot.history.size(); ++k) {
      const auto& f = slot.history[k].frame;
      for (std::size_t i = 0; i < f.size(); ++i) slot.p_min[i] = std::min(slot.p_min[i], f[i]);
    }
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  int n_days_ = 10;
  int slot_res_ = 300;
  std::map<int, Slot> slots_;
};

/// Functional form of BackgroundModel::update.
inline BackgroundModel update_background(BackgroundModel model, const Raster& frame, Instant t) {
  model.update(frame, t);
  return model;
}

/// Cloud index per sample and its 5-class segmentation.
struct CloudIndexMap {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> ci;
  std::vector<std::uint8_t> classes;  // empty until segment_ci
};

inline constexpr double kCloudIndexMinRange = 1.0 / 255.0;

/// ci = (p - p_min) / (p_max - p_min) clamped to [0,1], with p_max the frame
/// maximum. Samples whose range p_max - p_min is below 1/255 get 0.
inline CloudIndexMap cloud_index(const Raster& frame, const BackgroundModel& model, Instant t) {
  if (!model.matches(frame)) throw InvalidArgument("frame geometry does not match background model");
  const auto& pmin = model.p_min(t);
  const auto data = frame.data();
  const double pmax = *std::max_element(data.begin(), data.end());

  CloudIndexMap out{frame.width(), frame.height(), frame.channels(), std::vector<double>(data.size(), 0.0), {}};
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double lo = pmin[i];
    const double range = pmax - lo;
    if (range < kCloudIndexMinRange) continue;
    out.ci[i] = std::clamp((data[i] - lo) / range, 0.0, 1.0);
  }
  return out;
}

/// Class k <=> ci in [0.2k, 0.2(k+1)), with the top class closed at 1.
inline std::uint8_t ci_class(double ci) noexcept {
  std::uint8_t k = 0;
  for (double edge : {0.2, 0.4, 0.6, 0.8}) {
    if (ci >= edge) ++k;
  }
  return k;
}

inline CloudIndexMap segment_ci(CloudIndexMap map) {
  map.classes.resize(map.ci.size());
  std::transform(map.ci.begin(), map.ci.end(), map.classes.begin(), ci_class);
  return map;
}

/// ci * 255 as an 8-bit-ready raster.
inline Raster ci_raster(const CloudIndexMap& m) {
  Raster r(m.width, m.height, m.channels);
  auto d = r.data();
  for (std::size_t i = 0; i < m.ci.size(); ++i) d[i] = static_cast<float>(m.ci[i]);
  return r;
}

/// Class labels scaled by 50 (0, 50, ..., 200) as an 8-bit-ready raster.
inline Raster class_raster(const CloudIndexMap& m) {
  if (m.classes.size() != m.ci.size()) throw InvalidArgument("class_raster: map not segmented");
  Raster r(m.width, m.height, m.channels);
  auto d = r.data();
  for (std::size_t i = 0; i < m.classes.size(); ++i) d[i] = m.classes[i] * 50.0f / 255.0f;
  return r;
}

// On-disk layout (little-endian):
//   "SPINBKG1" | u32 width, height, channels, n_days, slot_resolution, n_slots
//   per slot:  i32 slot | u32 n_entries | per entry: i64 day, float32[W*H*C]
inline constexpr char kBackgroundMagic[8] = {'S', 'P', 'I', 'N', 'B', 'K', 'G', '1'};

inline void BackgroundModel::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot create " + path.string());
  auto put = [&](const auto& v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); };
  os.write(kBackgroundMagic, sizeof kBackgroundMagic);
  for (std::uint32_t v : {std::uint32_t(width_), std::uint32_t(height_), std::uint32_t(channels_),
                          std::uint32_t(n_days_), std::uint32_t(slot_res_), std::uint32_t(slots_.size())}) {
    put(v);
  }
  for (const auto& [index, slot] : slots_) {
    put(static_cast<std::int32_t>(index));
    put(static_cast<std::uint32_t>(slot.history.size()));
    for (const auto& e : slot.history) {
      put(static_cast<std::int64_t>(e.day));
      os.write(reinterpret_cast<const char*>(e.frame.data()),
               static_cast<std::streamsize>(e.frame.size() * sizeof(float)));
    }
  }
  if (!os) throw IoError("write failed for " + path.string());
}

inline BackgroundModel BackgroundModel::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  auto get = [&](auto& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw IoError(path.string() + ": truncated background file");
  };
  char magic[8];
  is.read(magic, sizeof magic);
  if (!is || std::memcmp(magic, kBackgroundMagic, sizeof magic) != 0) {
    throw IoError(path.string() + " is not a background model file");
  }
  std::uint32_t hdr[6];
  for (auto& v : hdr) get(v);
  BackgroundModel m(static_cast<int>(hdr[0]), static_cast<int>(hdr[1]), static_cast<int>(hdr[2]),
                    static_cast<int>(hdr[3]), static_cast<int>(hdr[4]));
  const std::size_t n = static_cast<std::size_t>(hdr[0]) * hdr[1] * hdr[2];
  for (std::uint32_t s = 0; s < hdr[5]; ++s) {
    std::int32_t index;
    std::uint32_t count;
    get(index);
    get(count);
    if (count == 0) throw IoError(path.string() + ": empty background slot");
    Slot& slot = m.slots_[index];
    for (std::uint32_t k = 0; k < count; ++k) {
      std::int64_t day;
      get(day);
      Entry e{static_cast<long>(day), std::vector<float>(n)};
      is.read(reinterpret_cast<char*>(e.frame.data()), static_cast<std::streamsize>(n * sizeof(float)));
      if (!is) throw IoError(path.string() + ": truncated background frame");
      slot.history.push_back(std::move(e));
    }
    recompute(slot);
  }
  return m;
}

}  // namespace spin
