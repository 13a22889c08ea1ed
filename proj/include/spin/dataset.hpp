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
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spin/error.hpp"
#include "spin/rng.hpp"
#include "spin/solar.hpp"
#include "spin/time.hpp"

namespace spin {

enum class Split { train, val, test };

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  return "train";
}

inline Split parse_split(std::string_view s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  if (s == "test") return Split::test;
  throw InvalidArgument("unknown split '" + std::string(s) + "'");
}

/// One training/evaluation sample: a gap-free context of frames ending at
/// `issued_at`, and the forecast horizons it is scored on.
struct SampleEntry {
  std::vector<std::string> frames;  // oldest first
  Instant issued_at;
  std::vector<Seconds> horizons;
  Split split = Split::train;

  friend bool operator==(const SampleEntry&, const SampleEntry&) = default;
};

struct SampleIndex {
  std::vector<SampleEntry> entries;  // ascending issued_at
  Site site;
  Seconds cadence{120};
  int context_frames = 5;

  std::vector<const SampleEntry*> of_split(Split s) const {
    std::vector<const SampleEntry*> out;
    for (const auto& e : entries) {
      if (e.split == s) out.push_back(&e);
    }
    return out;
  }
};

/// Default sequence shapes: 5 context frames; sky horizons 2..10 min at a
/// 2-min cadence, satellite horizons 10..50 min at a 5-min cadence (10-min steps).
inline std::vector<Seconds> sky_horizons() {
  return {Seconds{120}, Seconds{240}, Seconds{360}, Seconds{480}, Seconds{600}};
}
inline std::vector<Seconds> satellite_horizons() {
  return {Seconds{600}, Seconds{1200}, Seconds{1800}, Seconds{2400}, Seconds{3000}};
}

/// Lists `root/<day>/YYYYMMDDHHMMSS.png` as instant -> path. Files whose stem
/// is not a valid stamp are ignored.
inline std::map<Instant, std::filesystem::path> scan_image_tree(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw DataError("image directory not found: " + root.string());
  std::map<Instant, fs::path> out;
  for (const auto& day : fs::directory_iterator(root)) {
    if (!day.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(day.path())) {
      if (!f.is_regular_file() || f.path().extension() != ".png") continue;
      try {
        out.emplace(parse_compact(f.path().stem().string()), f.path());
      } catch (const InvalidArgument&) {
      }
    }
  }
  return out;
}

/// Builds one entry per frame whose `context_frames - 1` predecessors all
/// exist at exactly the declared cadence. Entries with any missing context
/// frame are dropped. Paths are stored relative to `root`.
inline SampleIndex index_frames(const std::map<Instant, std::filesystem::path>& frames,
                                const std::filesystem::path& root, Site site, Seconds cadence,
                                int context_frames, std::vector<Seconds> horizons) {
  if (cadence.count() <= 0) throw InvalidArgument("cadence must be positive");
  if (context_frames < 1) throw InvalidArgument("context_frames must be >= 1");
  SampleIndex idx{{}, site, cadence, context_frames};
  for (const auto& [t, path] : frames) {
    SampleEntry e{{}, t, horizons, Split::train};
    bool complete = true;
    for (int k = context_frames - 1; k >= 0; --k) {
      auto it = frames.find(t - k * cadence);
      if (it == frames.end()) {
        complete = false;
        break;
      }
      e.frames.push_back(std::filesystem::relative(it->second, root).generic_string());
    }
    if (complete) idx.entries.push_back(std::move(e));
  }
  return idx;
}

inline SampleIndex ingest_directory(const std::filesystem::path& root, Site site, Seconds cadence,
                                    int context_frames, std::vector<Seconds> horizons) {
  return index_frames(scan_image_tree(root), root, site, cadence, context_frames, std::move(horizons));
}

/// Drops entries whose issue-time solar elevation is below `min_elev_deg`.
inline SampleIndex filter_elevation(SampleIndex index, Site site, double min_elev_deg = 10.0) {
  std::erase_if(index.entries, [&](const SampleEntry& e) {
    return solar_position(e.issued_at, site).elevation < min_elev_deg;
  });
  return index;
}

/// Evaluation-year entries on even days of the month -> val, odd -> test;
/// every other year -> train.
inline SampleIndex split_even_odd(SampleIndex index, int eval_year) {
  for (auto& e : index.entries) {
    const CivilTime c = to_civil(e.issued_at);
    if (c.year != eval_year) {
      e.split = Split::train;
    } else {
      e.split = (c.day % 2 == 0) ? Split::val : Split::test;
    }
  }
  return index;
}

/// Result of sample_tdi_windows. Each window lists entry positions (into
/// SampleIndex::entries) of consecutive, gap-free test samples.
struct TdiWindows {
  std::vector<std::vector<std::size_t>> windows;
  std::size_t requested = 0;
  std::size_t realizable = 0;
  std::size_t candidate_starts = 0;
};

/// Draws up to `n_windows` distinct window starts uniformly among all test
/// positions that begin `window_len` consecutive samples. Deterministic per seed.
inline TdiWindows sample_tdi_windows(const SampleIndex& index, std::size_t n_windows,
                                     std::size_t window_len, std::uint64_t seed) {
  if (window_len < 1) throw InvalidArgument("window_len must be >= 1");
  std::vector<std::size_t> test;
  for (std::size_t i = 0; i < index.entries.size(); ++i) {
    if (index.entries[i].split == Split::test) test.push_back(i);
  }
  if (test.empty()) throw DataError("test split is empty; no TDI windows can be drawn");

  // run[k]: length of the consecutive run starting at test[k].
  std::vector<std::size_t> run(test.size(), 1);
  for (std::size_t k = test.size() - 1; k-- > 0;) {
    if (index.entries[test[k + 1]].issued_at - index.entries[test[k]].issued_at == index.cadence) {
      run[k] = run[k + 1] + 1;
    }
  }
  std::vector<std::size_t> starts;
  for (std::size_t k = 0; k < test.size(); ++k) {
    if (run[k] >= window_len) starts.push_back(k);
  }

  TdiWindows out;
  out.requested = n_windows;
  out.candidate_starts = starts.size();
  out.realizable = std::min(n_windows, starts.size());
  Rng rng(mix_seed(seed, 0x544449));
  // Partial Fisher-Yates: the first `realizable` slots become the draw.
  for (std::size_t k = 0; k < out.realizable; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(rng.uniform_int(starts.size() - k));
    std::swap(starts[k], starts[j]);
  }
  starts.resize(out.realizable);
  std::sort(starts.begin(), starts.end());
  for (std::size_t s : starts) {
    std::vector<std::size_t> w(window_len);
    for (std::size_t k = 0; k < window_len; ++k) w[k] = test[s + k];
    out.windows.push_back(std::move(w));
  }
  return out;
}

enum class TargetMode { absolute, change };

struct TargetSpec {
  TargetMode mode = TargetMode::absolute;
  bool aux_irradiance_channel = false;
};

/// Targets for one entry, or the reason it must be dropped.
struct TargetOutcome {
  std::optional<std::vector<double>> values;
  std::vector<double> aux_history;  // I at each context frame when requested
  std::string drop_reason;
};

/// absolute: I(t + h_k); change: I(t + h_k) - I(t).
inline TargetOutcome build_targets(const SampleEntry& entry, const IrradianceSeries& series,
                                   const TargetSpec& spec, Seconds cadence = Seconds{0}) {
  TargetOutcome out;
  auto value_at = [&](Instant t) -> std::optional<double> {
    auto i = series.find(t);
    if (!i) return std::nullopt;
    return series.ghi[*i];
  };
  const auto now = value_at(entry.issued_at);
  if (spec.mode == TargetMode::change && !now) {
    out.drop_reason = "missing I(t) at " + format_utc(entry.issued_at);
    return out;
  }
  std::vector<double> v;
  for (Seconds h : entry.horizons) {
    const auto future = value_at(entry.issued_at + h);
    if (!future) {
      out.drop_reason = "missing I(t+" + std::to_string(h.count()) + "s) at " + format_utc(entry.issued_at + h);
      return out;
    }
    v.push_back(spec.mode == TargetMode::absolute ? *future : *future - *now);
  }
  if (spec.aux_irradiance_channel) {
    const auto n = static_cast<long>(entry.frames.size());
    for (long k = n - 1; k >= 0; --k) {
      const Instant tk = entry.issued_at - k * cadence;
      const auto vk = value_at(tk);
      if (!vk) {
        out.drop_reason = "missing irradiance history at " + format_utc(tk);
        return out;
      }
      out.aux_history.push_back(*vk);
    }
  }
  out.values = std::move(v);
  return out;
}

// Manifest: first line is a meta record, then one JSON object per entry.
inline std::string manifest_text(const SampleIndex& idx) {
  using nlohmann::json;
  std::ostringstream os;
  json meta = {{"type", "meta"},
               {"site", {{"lat", idx.site.lat_deg}, {"lon", idx.site.lon_deg}}},
               {"cadence_s", idx.cadence.count()},
               {"context_frames", idx.context_frames}};
  os << meta.dump() << '\n';
  for (const auto& e : idx.entries) {
    json h = json::array();
    for (auto s : e.horizons) h.push_back(s.count());
    json j = {{"type", "sample"},
              {"issued_at", format_utc(e.issued_at)},
              {"frames", e.frames},
              {"horizons_s", h},
              {"split", std::string(to_string(e.split))}};
    os << j.dump() << '\n';
  }
  return os.str();
}

inline void save_manifest(const SampleIndex& idx, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot create " + path.string());
  os << manifest_text(idx);
}

inline SampleIndex load_manifest(const std::filesystem::path& path) {
  using nlohmann::json;
  std::ifstream is(path);
  if (!is) throw IoError("cannot open manifest " + path.string());
  SampleIndex idx;
  std::string line;
  std::size_t lineno = 0;
  bool have_meta = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (j.at("type") == "meta") {
        idx.site = {j.at("site").at("lat").get<double>(), j.at("site").at("lon").get<double>()};
        idx.cadence = Seconds{j.at("cadence_s").get<long>()};
        idx.context_frames = j.at("context_frames").get<int>();
        have_meta = true;
        continue;
      }
      SampleEntry e;
      e.issued_at = parse_utc(j.at("issued_at").get<std::string>());
      e.frames = j.at("frames").get<std::vector<std::string>>();
      for (long s : j.at("horizons_s").get<std::vector<long>>()) e.horizons.emplace_back(s);
      e.split = parse_split(j.at("split").get<std::string>());
      idx.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_meta) throw DataError(path.string() + ": manifest has no meta record");
  return idx;
}

/// FNV-1a 64 of the manifest text, as 16 hex digits.
inline std::string index_digest(const SampleIndex& idx) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : manifest_text(idx)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace spin
