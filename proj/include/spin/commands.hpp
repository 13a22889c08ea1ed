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

// Subcommand implementations behind the `spin` executable. Each command takes
// a RunConfig, writes under cfg.output_dir and returns a process exit code:
// 0 success, 1 config error, 2 data error, 3 internal invariant failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "spin/augment.hpp"
#include "spin/cloudindex.hpp"
#include "spin/config.hpp"
#include "spin/dataset.hpp"
#include "spin/error.hpp"
#include "spin/geometry.hpp"
#include "spin/image_io.hpp"
#include "spin/metrics.hpp"
#include "spin/parallel.hpp"
#include "spin/report.hpp"
#include "spin/solar.hpp"
#include "spin/synth.hpp"

namespace spin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitInternal = 3;

namespace fs = std::filesystem;
using nlohmann::json;

/// Runs `body`, mapping escaping exceptions onto exit codes.
inline int run_guarded(const std::function<int()>& body, std::ostream& log) {
  try {
    return body();
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError& e) {
    log << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const MissingSample& e) {
    log << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const MissingBackground& e) {
    log << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const InvalidArgument& e) {
    log << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    log << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

/// Applies one scene transformation. `sun` is the rotation centre for sky
/// images; without it the image centre is used (satellite views).
inline Raster apply_transformation(const Raster& img, Transformation t, std::optional<SunPixel> sun,
                                   const SpinGrid& grid) {
  const PixelPoint center = sun ? sun->position : image_center(img);
  switch (t) {
    case Transformation::raw:
      return resize(img, grid.out_w, grid.out_h);
    case Transformation::sun_centred:
      return resize(center_on_sun(img, SunPixel{center, true}), grid.out_w, grid.out_h);
    case Transformation::csa:
      return resize(circumsolar_closeup(img, center), grid.out_w, grid.out_h);
    case Transformation::spin:
      return spin_transform(img, center, grid);
    case Transformation::spin_closeup: {
      const Raster close = circumsolar_closeup(img, center);
      return spin_transform(close, image_center(close), grid);
    }
  }
  throw InvalidArgument("unhandled transformation");
}

namespace detail {

inline void write_lines(const fs::path& path, const std::vector<json>& lines) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot create " + path.string());
  for (const auto& l : lines) os << l.dump() << '\n';
}

inline std::optional<SunPixel> sun_for(const std::map<Instant, SunPixel>& sidecar, Instant t,
                                       bool sidecar_given) {
  if (!sidecar_given) return std::nullopt;
  auto it = sidecar.find(t);
  if (it == sidecar.end()) throw DataError("no sun position for " + format_utc(t));
  return it->second;
}

inline IrradianceSeries load_series(const RunConfig& cfg) {
  if (cfg.irradiance_csv.empty()) throw ConfigError("irradiance_csv is required for this command");
  return load_irradiance_csv(cfg.irradiance_csv,
                             cfg.clearsky_fallback ? std::optional<Site>(cfg.site) : std::nullopt);
}

// Index of issue times taken straight from the irradiance series (no frames).
inline SampleIndex index_from_series(const RunConfig& cfg, const IrradianceSeries& series) {
  SampleIndex idx{{}, cfg.site, cfg.cadence, cfg.context_frames};
  for (Instant t : series.timestamps) idx.entries.push_back({{}, t, cfg.horizons, Split::train});
  return idx;
}

}  // namespace detail

/// Manifest if configured, else images_dir ingestion, else the irradiance
/// series' own timestamps; then elevation filter and even/odd split.
inline SampleIndex obtain_index(const RunConfig& cfg, const IrradianceSeries* series = nullptr) {
  if (!cfg.manifest.empty()) return load_manifest(cfg.manifest);
  SampleIndex idx;
  if (!cfg.images_dir.empty()) {
    idx = ingest_directory(cfg.images_dir, cfg.site, cfg.cadence, cfg.context_frames, cfg.horizons);
  } else if (series) {
    idx = detail::index_from_series(cfg, *series);
  } else {
    throw ConfigError("need manifest, images_dir or irradiance_csv to build a sample index");
  }
  return split_even_odd(filter_elevation(std::move(idx), cfg.site, cfg.min_elevation_deg), cfg.eval_year);
}

inline int cmd_transform(const RunConfig& cfg, std::ostream& log = std::cerr) {
  if (cfg.images_dir.empty()) throw ConfigError("transform needs images_dir");
  const auto frames = scan_image_tree(cfg.images_dir);
  const bool have_sidecar = !cfg.sun_sidecar.empty();
  const auto sidecar = have_sidecar ? load_sun_sidecar(cfg.sun_sidecar) : std::map<Instant, SunPixel>{};
  const fs::path out_root = cfg.output_dir / "transformed";

  std::vector<std::pair<Instant, fs::path>> items(frames.begin(), frames.end());
  std::vector<std::string> errors(items.size());
  parallel_for(items.size(), cfg.workers, [&](std::size_t i) {
    const auto& [t, in] = items[i];
    const fs::path rel = fs::relative(in, cfg.images_dir);
    try {
      fs::create_directories((out_root / rel).parent_path());
      if (cfg.transformation == Transformation::raw) {
        fs::copy_file(in, out_root / rel, fs::copy_options::overwrite_existing);
        return;
      }
      const Raster img = io::load_png(in);
      io::save_png(apply_transformation(img, cfg.transformation, detail::sun_for(sidecar, t, have_sidecar), cfg.grid),
                   out_root / rel);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  std::vector<json> manifest;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const fs::path rel = fs::relative(items[i].second, cfg.images_dir);
    json line = {{"timestamp", format_utc(items[i].first)}, {"input", rel.generic_string()}};
    if (errors[i].empty()) {
      line["output"] = (fs::path("transformed") / rel).generic_string();
      line["transformation"] = std::string(to_string(cfg.transformation));
    } else {
      line["skipped"] = errors[i];
      log << "skipped " << rel.generic_string() << ": " << errors[i] << '\n';
      ++skipped;
    }
    manifest.push_back(std::move(line));
  }
  detail::write_lines(cfg.output_dir / "transform_manifest.jsonl", manifest);
  log << "transform: " << items.size() - skipped << " written, " << skipped << " skipped\n";
  return skipped ? kExitData : kExitOk;
}

inline int cmd_split(const RunConfig& cfg, std::ostream& log = std::cerr) {
  std::optional<IrradianceSeries> series;
  if (cfg.images_dir.empty() && cfg.manifest.empty()) series = detail::load_series(cfg);
  RunConfig c = cfg;
  c.manifest.clear();
  const SampleIndex idx = obtain_index(c, series ? &*series : nullptr);
  save_manifest(idx, cfg.output_dir / "samples.jsonl");
  const auto n_train = idx.of_split(Split::train).size();
  const auto n_val = idx.of_split(Split::val).size();
  const auto n_test = idx.of_split(Split::test).size();
  const json summary = {{"train", n_train}, {"val", n_val}, {"test", n_test}, {"digest", index_digest(idx)}};
  detail::write_lines(cfg.output_dir / "split_summary.json", {summary});
  log << "split: train " << n_train << ", val " << n_val << ", test " << n_test << '\n';
  return kExitOk;
}

inline int cmd_augment(const RunConfig& cfg, std::ostream& log = std::cerr) {
  const bool polar = is_polar(cfg.transformation);
  for (const auto& p : cfg.augment) {
    if (p.kind == AugmentKind::rotation && polar) throw ConfigError("rotation augmentation on polar frames");
    if (p.kind == AugmentKind::polar_translation && !polar) {
      throw ConfigError("polar_translation augmentation needs a polar transformation");
    }
  }
  if (cfg.images_dir.empty()) throw ConfigError("augment needs images_dir");
  const SampleIndex idx = obtain_index(cfg);
  const bool have_sidecar = !cfg.sun_sidecar.empty();
  const auto sidecar = have_sidecar ? load_sun_sidecar(cfg.sun_sidecar) : std::map<Instant, SunPixel>{};
  const auto train = idx.of_split(Split::train);

  std::vector<json> lines(train.size());
  std::vector<std::string> errors(train.size());
  parallel_for(train.size(), cfg.workers, [&](std::size_t i) {
    const SampleEntry& e = *train[i];
    try {
      FrameSequence seq;
      seq.stride = idx.cadence;
      seq.polar = polar;
      const auto n = static_cast<long>(e.frames.size());
      for (long k = 0; k < n; ++k) {
        const Instant tk = e.issued_at - (n - 1 - k) * idx.cadence;
        Raster img = io::load_png(cfg.images_dir / e.frames[k]);
        if (cfg.transformation != Transformation::raw || img.width() != cfg.grid.out_w ||
            img.height() != cfg.grid.out_h) {
          img = apply_transformation(img, cfg.transformation, detail::sun_for(sidecar, tk, have_sidecar), cfg.grid);
        }
        seq.frames.push_back(std::move(img));
        seq.timestamps.push_back(tk);
      }
      Rng rng = policy_rng(cfg.augment, static_cast<std::uint64_t>(e.issued_at.time_since_epoch().count()));
      std::vector<AppliedAugment> applied;
      const FrameSequence out = apply_policy(seq, cfg.augment, rng, &applied);

      const std::string stamp = format_compact(e.issued_at);
      json outs = json::array();
      for (std::size_t k = 0; k < out.frames.size(); ++k) {
        const fs::path rel = fs::path("augmented") / stamp / ("f" + std::to_string(k) + ".png");
        io::save_png(out.frames[k], cfg.output_dir / rel);
        outs.push_back(rel.generic_string());
      }
      json app = json::array();
      for (const auto& a : applied) {
        app.push_back({{"kind", std::string(to_string(a.kind))}, {"rotation_deg", a.rotation_deg},
                       {"shift_rows", a.shift_rows}});
      }
      json targets = json::array();
      for (Instant t : target_instants(out, e.horizons)) targets.push_back(format_utc(t));
      lines[i] = {{"issued_at", format_utc(e.issued_at)}, {"frames", outs}, {"reversed", out.reversed},
                  {"applied", app}, {"target_instants", targets}};
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
      lines[i] = {{"issued_at", format_utc(e.issued_at)}, {"skipped", ex.what()}};
    }
  });
  detail::write_lines(cfg.output_dir / "augment_manifest.jsonl", lines);
  const auto skipped = std::count_if(errors.begin(), errors.end(), [](const std::string& s) { return !s.empty(); });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) log << "skipped " << format_utc(train[i]->issued_at) << ": " << errors[i] << '\n';
  }
  log << "augment: " << train.size() - skipped << " sequences written\n";
  return skipped ? kExitData : kExitOk;
}

namespace detail {

// Key of one scored forecast: (issue instant, horizon seconds).
using ForecastKey = std::pair<Instant, long>;

inline TdiSummary tdi_over_windows(const SampleIndex& idx, const TdiWindows& windows, Seconds h,
                                   const std::function<std::optional<double>(Instant)>& predicted,
                                   const IrradianceSeries& series) {
  TdiSummary s;
  for (const auto& w : windows.windows) {
    std::vector<double> pred, obs;
    bool complete = true;
    for (std::size_t pos : w) {
      const Instant t = idx.entries[pos].issued_at;
      const auto p = predicted(t);
      const auto o = series.find(t + h);
      if (!p || !o) {
        complete = false;
        break;
      }
      pred.push_back(*p);
      obs.push_back(series.ghi[*o]);
    }
    if (!complete || pred.size() < 2) {
      ++s.degenerate;
      continue;
    }
    accumulate(s, tdi(pred, obs));
  }
  return s;
}

inline std::optional<double> try_forecast(Forecast (*fn)(const IrradianceSeries&, Instant, Seconds),
                                          const IrradianceSeries& s, Instant t, Seconds h) {
  try {
    return fn(s, t, h).value;
  } catch (const MissingSample&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline int cmd_baseline(const RunConfig& cfg, std::ostream& log = std::cerr) {
  const IrradianceSeries series = detail::load_series(cfg);
  if (!series.has_clearsky() && !cfg.clearsky_fallback) {
    throw ConfigError("irradiance file lacks clear-sky values and clearsky_fallback is off");
  }
  const SampleIndex idx = obtain_index(cfg, &series);
  const auto test = idx.of_split(Split::test);
  if (test.empty()) throw DataError("test split is empty");
  std::optional<TdiWindows> windows;
  if (cfg.tdi) windows = sample_tdi_windows(idx, cfg.tdi->n_windows, cfg.tdi->window_len, cfg.tdi->seed);

  std::vector<MetricReport> reports;
  for (Seconds h : cfg.horizons) {
    ForecastSet pm{{}, h}, spm{{}, h};
    std::size_t dropped = 0;
    for (const SampleEntry* e : test) {
      const auto obs = series.find(e->issued_at + h);
      const auto p = detail::try_forecast(&persistence, series, e->issued_at, h);
      const auto s = detail::try_forecast(&smart_persistence, series, e->issued_at, h);
      if (!obs || !p || !s) {
        ++dropped;
        continue;
      }
      pm.pairs.push_back({*p, series.ghi[*obs]});
      spm.pairs.push_back({*s, series.ghi[*obs]});
    }
    if (pm.pairs.empty()) throw DataError("no scorable test samples at horizon " + std::to_string(h.count()) + "s");
    if (dropped) log << "baseline h=" << h.count() << "s: " << dropped << " samples lacked data\n";

    const double spm_rmse = rmse(spm);
    MetricReport rp = make_report("persistence", pm, spm_rmse);
    MetricReport rs = make_report("smart_persistence", spm, spm_rmse);
    rs.fs_pct = 0.0;  // the reference model, by definition
    if (windows) {
      set_tdi(rp, detail::tdi_over_windows(idx, *windows, h,
                                           [&](Instant t) { return detail::try_forecast(&persistence, series, t, h); },
                                           series));
      set_tdi(rs, detail::tdi_over_windows(
                      idx, *windows, h,
                      [&](Instant t) { return detail::try_forecast(&smart_persistence, series, t, h); }, series));
    }
    reports.push_back(rp);
    reports.push_back(rs);
  }
  write_reports(reports, cfg.output_dir / "baseline");
  log << "baseline: " << reports.size() << " reports written\n";
  return kExitOk;
}

/// Predictions keyed by (issue instant, horizon), from
/// `issued_at_utc,horizon_s,predicted_wm2`.
inline std::map<detail::ForecastKey, double> load_predictions(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open predictions file " + path.string());
  std::string line;
  std::getline(is, line);
  const auto header = spin::detail::split_csv_line(line);
  if (header.size() < 3 || header[0] != "issued_at_utc" || header[1] != "horizon_s" || header[2] != "predicted_wm2") {
    throw DataError(path.string() + ": header must be issued_at_utc,horizon_s,predicted_wm2");
  }
  std::map<detail::ForecastKey, double> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto c = spin::detail::split_csv_line(line);
    try {
      if (c.size() < 3) throw InvalidArgument("expected 3 columns");
      const double v = std::stod(c[2]);
      if (!std::isfinite(v)) throw InvalidArgument("non-finite prediction");
      if (!out.emplace(detail::ForecastKey{parse_utc(c[0]), std::stol(c[1])}, v).second) {
        throw InvalidArgument("duplicate prediction");
      }
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline int cmd_evaluate(const RunConfig& cfg, const fs::path& predictions_file, std::ostream& log = std::cerr) {
  if (!cfg.tdi) throw ConfigError("evaluate needs a tdi section (n_windows, window_len, seed)");
  const IrradianceSeries series = detail::load_series(cfg);
  if (!series.has_clearsky() && !cfg.clearsky_fallback) {
    throw ConfigError("irradiance file lacks clear-sky values and clearsky_fallback is off");
  }
  const auto predictions = load_predictions(predictions_file);
  const SampleIndex idx = obtain_index(cfg, &series);
  const auto test = idx.of_split(Split::test);

  // Expected keys: every test entry and horizon with an observation and an SPM value.
  std::set<detail::ForecastKey> expected;
  for (const SampleEntry* e : test) {
    for (Seconds h : e->horizons) {
      if (series.find(e->issued_at + h) && detail::try_forecast(&smart_persistence, series, e->issued_at, h)) {
        expected.insert({e->issued_at, h.count()});
      }
    }
  }
  std::vector<detail::ForecastKey> missing, extra;
  for (const auto& k : expected) {
    if (!predictions.count(k)) missing.push_back(k);
  }
  for (const auto& [k, v] : predictions) {
    if (!expected.count(k)) extra.push_back(k);
  }
  if (!missing.empty() || !extra.empty()) {
    log << "predictions do not align with the test index: " << missing.size() << " missing, " << extra.size()
        << " extra\n";
    auto dump = [&](const char* tag, const std::vector<detail::ForecastKey>& keys) {
      for (std::size_t i = 0; i < keys.size() && i < 50; ++i) {
        log << "  " << tag << ' ' << format_utc(keys[i].first) << " h=" << keys[i].second << "s\n";
      }
      if (keys.size() > 50) log << "  ... " << keys.size() - 50 << " more " << tag << '\n';
    };
    dump("missing", missing);
    dump("extra", extra);
    return kExitData;
  }
  if (expected.empty()) throw DataError("no scorable test samples");

  const TdiWindows windows = sample_tdi_windows(idx, cfg.tdi->n_windows, cfg.tdi->window_len, cfg.tdi->seed);
  if (windows.realizable < windows.requested) {
    log << "evaluate: only " << windows.realizable << " of " << windows.requested << " TDI windows realizable\n";
  }
  std::set<long> horizons;
  for (const auto& k : expected) horizons.insert(k.second);

  std::vector<MetricReport> reports;
  for (long hs : horizons) {
    const Seconds h{hs};
    ForecastSet model{{}, h}, spm{{}, h};
    for (const auto& k : expected) {
      if (k.second != hs) continue;
      const double obs = series.ghi[*series.find(k.first + h)];
      model.pairs.push_back({predictions.at(k), obs});
      spm.pairs.push_back({smart_persistence(series, k.first, h).value, obs});
    }
    const double spm_rmse = rmse(spm);
    MetricReport rm = make_report("model", model, spm_rmse);
    MetricReport rs = make_report("smart_persistence", spm, spm_rmse);
    rs.fs_pct = 0.0;
    set_tdi(rm, detail::tdi_over_windows(idx, windows, h,
                                         [&](Instant t) -> std::optional<double> {
                                           auto it = predictions.find({t, hs});
                                           if (it == predictions.end()) return std::nullopt;
                                           return it->second;
                                         },
                                         series));
    set_tdi(rs, detail::tdi_over_windows(
                    idx, windows, h, [&](Instant t) { return detail::try_forecast(&smart_persistence, series, t, h); },
                    series));
    reports.push_back(rm);
    reports.push_back(rs);
  }
  write_reports(reports, cfg.output_dir / "evaluation");
  log << "evaluate: " << expected.size() << " forecasts scored\n";
  return kExitOk;
}

inline int cmd_cloudindex(const RunConfig& cfg, std::ostream& log = std::cerr) {
  if (cfg.images_dir.empty()) throw ConfigError("cloudindex needs images_dir");
  const auto frames = scan_image_tree(cfg.images_dir);
  if (frames.empty()) throw DataError("no frames under " + cfg.images_dir.string());

  std::optional<BackgroundModel> model;
  std::vector<json> manifest;
  std::optional<Instant> prev;
  std::size_t gaps = 0;
  for (const auto& [t, path] : frames) {
    const Raster img = io::load_png(path);
    if (!model) model.emplace(img.width(), img.height(), img.channels(), cfg.cloudindex.n_days,
                              cfg.cloudindex.slot_resolution_s);
    model->update(img, t);
    const CloudIndexMap map = segment_ci(cloud_index(img, *model, t));

    const fs::path rel = fs::relative(path, cfg.images_dir);
    const fs::path ci_rel = fs::path("ci") / rel;
    const fs::path cls_rel = fs::path("classes") / rel;
    io::save_png(ci_raster(map), cfg.output_dir / ci_rel);
    io::save_png(class_raster(map), cfg.output_dir / cls_rel);

    const bool gap = prev && day_number(*prev) == day_number(t) && t - *prev > cfg.cadence;
    if (gap) {
      ++gaps;
      log << "cadence gap before " << format_utc(t) << '\n';
    }
    const int slot = model->slot_of(t);
    manifest.push_back({{"timestamp", format_utc(t)},
                        {"input", rel.generic_string()},
                        {"ci", ci_rel.generic_string()},
                        {"classes", cls_rel.generic_string()},
                        {"slot", slot},
                        {"history_days", model->slots().at(slot).history.size()},
                        {"gap_before", gap}});
    prev = t;
  }
  model->save(cfg.output_dir / "background.bin");
  detail::write_lines(cfg.output_dir / "cloudindex_manifest.jsonl", manifest);
  log << "cloudindex: " << frames.size() << " frames, " << gaps << " cadence gaps\n";
  return kExitOk;
}

inline int cmd_synth(const RunConfig& cfg, std::ostream& log = std::cerr) {
  if (!cfg.synth) throw ConfigError("synth needs a synth section");
  const SynthConfig& sc = *cfg.synth;
  IrradianceSeries all;
  fs::create_directories(cfg.output_dir);
  std::ofstream sun(cfg.output_dir / "sun.csv", std::ios::binary);
  if (!sun) throw IoError("cannot create sun.csv");
  sun << "timestamp_utc,x,y,visible\n";

  for (int d = 0; d < sc.days; ++d) {
    SceneSpec day = sc.scene;
    day.start = sc.scene.start + std::chrono::days{d};
    std::vector<Instant> stamps(sc.frames_per_day);
    for (int k = 0; k < sc.frames_per_day; ++k) stamps[k] = day.start + k * day.cadence;
    parallel_for(stamps.size(), cfg.workers, [&](std::size_t k) {
      io::save_png(render_frame(day, static_cast<int>(k)),
                   cfg.output_dir / "images" / day_dir_name(stamps[k]) / (format_compact(stamps[k]) + ".png"));
    });
    for (Instant t : stamps) {
      sun << format_utc(t) << ',' << day.sun.center.x << ',' << day.sun.center.y << ",1\n";
    }
    const IrradianceSeries s = render_irradiance(day, sc.frames_per_day);
    all.timestamps.insert(all.timestamps.end(), s.timestamps.begin(), s.timestamps.end());
    all.ghi.insert(all.ghi.end(), s.ghi.begin(), s.ghi.end());
    all.ghi_clearsky.insert(all.ghi_clearsky.end(), s.ghi_clearsky.begin(), s.ghi_clearsky.end());
  }
  save_irradiance_csv(all, cfg.output_dir / "irradiance.csv");
  log << "synth: " << sc.days * sc.frames_per_day << " frames rendered\n";
  return kExitOk;
}

}  // namespace spin::cli
