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
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spin/error.hpp"
#include "spin/time.hpp"

namespace spin {

struct Site {
  double lat_deg = 0.0;
  double lon_deg = 0.0;  // east positive
};

/// Sun position as seen from a site. elevation == 90 - zenith.
struct SolarGeometry {
  double zenith = 0.0;
  double azimuth = 0.0;  // degrees clockwise from north, [0, 360)
  double elevation = 90.0;
};

namespace detail {
inline constexpr double kDeg = std::numbers::pi / 180.0;
inline double wrap360(double d) {
  d = std::fmod(d, 360.0);
  return d < 0.0 ? d + 360.0 : d;
}
}  // namespace detail

/// Geometric (unrefracted) solar position from the low-order solar
/// coordinates of Meeus' Astronomical Algorithms, as used by the NOAA solar
/// calculator. Accurate to ~0.01 degrees for 1900-2100.
inline SolarGeometry solar_position(Instant t, double lat_deg, double lon_deg) {
  using detail::kDeg;
  if (!(std::abs(lat_deg) <= 90.0)) throw InvalidArgument("latitude must lie in [-90, 90]");

  const double jd = julian_date(t);
  const double T = (jd - 2451545.0) / 36525.0;

  const double L0 = detail::wrap360(280.46646 + T * (36000.76983 + T * 0.0003032));
  const double M = 357.52911 + T * (35999.05029 - 0.0001537 * T);
  const double e = 0.016708634 - T * (0.000042037 + 0.0000001267 * T);
  const double C = std::sin(M * kDeg) * (1.914602 - T * (0.004817 + 0.000014 * T)) +
                   std::sin(2 * M * kDeg) * (0.019993 - 0.000101 * T) +
                   std::sin(3 * M * kDeg) * 0.000289;
  const double omega = 125.04 - 1934.136 * T;
  const double lambda = L0 + C - 0.00569 - 0.00478 * std::sin(omega * kDeg);
  const double eps0 = 23.0 + (26.0 + (21.448 - T * (46.815 + T * (0.00059 - T * 0.001813))) / 60.0) / 60.0;
  const double eps = eps0 + 0.00256 * std::cos(omega * kDeg);
  const double decl = std::asin(std::sin(eps * kDeg) * std::sin(lambda * kDeg));

  const double y = std::pow(std::tan(eps * kDeg / 2.0), 2);
  const double eot_min =
      4.0 / kDeg *
      (y * std::sin(2 * L0 * kDeg) - 2 * e * std::sin(M * kDeg) +
       4 * e * y * std::sin(M * kDeg) * std::cos(2 * L0 * kDeg) -
       0.5 * y * y * std::sin(4 * L0 * kDeg) - 1.25 * e * e * std::sin(2 * M * kDeg));

  const double minutes_utc = seconds_of_day(t) / 60.0;
  const double true_solar_min = minutes_utc + eot_min + 4.0 * lon_deg;
  const double ha = (true_solar_min / 4.0 - 180.0) * kDeg;
  const double lat = lat_deg * kDeg;

  const double cos_z = std::clamp(
      std::sin(lat) * std::sin(decl) + std::cos(lat) * std::cos(decl) * std::cos(ha), -1.0, 1.0);
  const double zenith = std::acos(cos_z) / kDeg;
  const double az = std::atan2(std::sin(ha), std::cos(ha) * std::sin(lat) - std::tan(decl) * std::cos(lat));
  return {zenith, detail::wrap360(az / kDeg + 180.0), 90.0 - zenith};
}

inline SolarGeometry solar_position(Instant t, const Site& site) {
  return solar_position(t, site.lat_deg, site.lon_deg);
}

/// Haurwitz clear-sky GHI, 1098 cos z exp(-0.057 / cos z), 0 with the sun down.
/// An analytic stand-in for an external clear-sky product.
inline double clearsky_fallback(const SolarGeometry& geom) {
  if (geom.elevation <= 0.0) return 0.0;
  const double cz = std::cos(geom.zenith * detail::kDeg);
  if (cz <= 0.0) return 0.0;
  return 1098.0 * cz * std::exp(-0.057 / cz);
}

/// Timestamped GHI measurements with the matching clear-sky GHI (W/m2).
/// A NaN clear-sky entry marks a missing value.
struct IrradianceSeries {
  std::vector<Instant> timestamps;
  std::vector<double> ghi;
  std::vector<double> ghi_clearsky;

  std::size_t size() const noexcept { return timestamps.size(); }

  void validate() const {
    if (ghi.size() != timestamps.size() || ghi_clearsky.size() != timestamps.size()) {
      throw InvalidArgument("irradiance series columns differ in length");
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (i > 0 && timestamps[i] <= timestamps[i - 1]) {
        throw InvalidArgument("irradiance timestamps must be strictly increasing at " +
                              format_utc(timestamps[i]));
      }
      if (!(ghi[i] >= 0.0)) throw InvalidArgument("negative or NaN GHI at " + format_utc(timestamps[i]));
      if (ghi_clearsky[i] < 0.0) {
        throw InvalidArgument("negative clear-sky GHI at " + format_utc(timestamps[i]));
      }
    }
  }

  std::optional<std::size_t> find(Instant t) const {
    auto it = std::lower_bound(timestamps.begin(), timestamps.end(), t);
    if (it == timestamps.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - timestamps.begin());
  }

  double ghi_at(Instant t) const {
    auto i = find(t);
    if (!i) throw MissingSample("no GHI sample at " + format_utc(t));
    return ghi[*i];
  }

  double clearsky_at(Instant t) const {
    auto i = find(t);
    if (!i || std::isnan(ghi_clearsky[*i])) {
      throw MissingSample("no clear-sky sample at " + format_utc(t));
    }
    return ghi_clearsky[*i];
  }

  bool has_clearsky() const {
    return std::none_of(ghi_clearsky.begin(), ghi_clearsky.end(), [](double v) { return std::isnan(v); });
  }
};

/// Point forecast issued at `issued_at` for issued_at + horizon.
struct Forecast {
  Instant issued_at;
  Seconds horizon{0};
  double value = 0.0;
};

inline void check_horizon(Seconds dT) {
  if (dT.count() <= 0) throw InvalidArgument("forecast horizon must be positive");
}

/// Persistence: I_hat(t + dT) = I(t).
inline Forecast persistence(const IrradianceSeries& series, Instant t, Seconds dT) {
  check_horizon(dT);
  return {t, dT, std::max(0.0, series.ghi_at(t))};
}

inline constexpr double kClearSkyIndexMax = 1.5;
inline constexpr double kLowSunClearSkyFloor = 10.0;  // W/m2

/// Clear-sky index I(t) / I_clr(t), clamped to [0, 1.5]; 1 when I_clr(t) < 10 W/m2.
inline double clear_sky_index(double ghi, double ghi_clear) {
  if (ghi_clear < kLowSunClearSkyFloor) return 1.0;
  return std::clamp(ghi / ghi_clear, 0.0, kClearSkyIndexMax);
}

/// Smart persistence: I_hat(t + dT) = k_c(t) * I_clr(t + dT).
inline Forecast smart_persistence(const IrradianceSeries& series, Instant t, Seconds dT) {
  check_horizon(dT);
  const double kc = clear_sky_index(series.ghi_at(t), series.clearsky_at(t));
  const double value = kc * series.clearsky_at(t + dT);
  return {t, dT, std::isfinite(value) ? std::max(0.0, value) : 0.0};
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline std::optional<double> parse_number(const std::string& s) {
  if (s.empty() || s == "nan" || s == "NaN" || s == "NA") return std::nullopt;
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "'");
  return v;
}

}  // namespace detail

/// Reads `timestamp_utc,ghi_wm2[,ghi_clearsky_wm2]`. Rows without a GHI value
/// are dropped (they become gaps); small negative night readings are clamped
/// to 0. Without a clear-sky column (or with empty cells) the value is NaN
/// unless `fallback_site` is given, in which case the Haurwitz estimate fills it.
inline IrradianceSeries load_irradiance_csv(const std::filesystem::path& path,
                                            std::optional<Site> fallback_site = std::nullopt) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open irradiance file " + path.string());
  std::string line;
  if (!std::getline(is, line)) throw DataError(path.string() + ": empty irradiance file");
  const auto header = detail::split_csv_line(line);
  auto col = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto c_ts = col("timestamp_utc");
  const auto c_ghi = col("ghi_wm2");
  const auto c_clr = col("ghi_clearsky_wm2");
  if (!c_ts || !c_ghi) {
    throw DataError(path.string() + ": header must contain timestamp_utc and ghi_wm2");
  }

  IrradianceSeries s;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv_line(line);
    try {
      if (cells.size() <= std::max(*c_ts, *c_ghi)) throw InvalidArgument("too few columns");
      const Instant t = parse_utc(cells[*c_ts]);
      const auto ghi = detail::parse_number(cells[*c_ghi]);
      if (!ghi) continue;
      std::optional<double> clr;
      if (c_clr && *c_clr < cells.size()) clr = detail::parse_number(cells[*c_clr]);
      if (!clr && fallback_site) clr = clearsky_fallback(solar_position(t, *fallback_site));
      s.timestamps.push_back(t);
      s.ghi.push_back(std::max(0.0, *ghi));
      s.ghi_clearsky.push_back(clr ? std::max(0.0, *clr) : std::numeric_limits<double>::quiet_NaN());
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return s;
}

inline void save_irradiance_csv(const IrradianceSeries& s, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw IoError("cannot create " + path.string());
  os << "timestamp_utc,ghi_wm2,ghi_clearsky_wm2\n";
  os.precision(10);
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << format_utc(s.timestamps[i]) << ',' << s.ghi[i] << ',';
    if (!std::isnan(s.ghi_clearsky[i])) os << s.ghi_clearsky[i];
    os << '\n';
  }
}

}  // namespace spin
