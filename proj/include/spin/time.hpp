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

#include <chrono>
#include <cstdio>
#include <string>
#include <string_view>

#include "spin/error.hpp"

namespace spin {

/// UTC instant at one-second resolution.
using Instant = std::chrono::sys_seconds;
using Seconds = std::chrono::seconds;

namespace detail {

inline bool parse_fields(std::string_view s, const char* fmt, int& Y, int& M, int& D, int& h,
                         int& m, int& sec) {
  const std::string buf(s);
  int consumed = 0;
  const std::string full = std::string(fmt) + "%n";
  if (std::sscanf(buf.c_str(), full.c_str(), &Y, &M, &D, &h, &m, &sec, &consumed) != 6) {
    return false;
  }
  return static_cast<std::size_t>(consumed) == buf.size();
}

inline Instant make_instant(int Y, int M, int D, int h, int m, int s, std::string_view src) {
  using namespace std::chrono;
  const year_month_day ymd{year{Y}, month{static_cast<unsigned>(M)}, day{static_cast<unsigned>(D)}};
  if (!ymd.ok() || h < 0 || h > 23 || m < 0 || m > 59 || s < 0 || s > 60) {
    throw InvalidArgument("invalid calendar time: " + std::string(src));
  }
  return sys_days{ymd} + hours{h} + minutes{m} + seconds{s};
}

}  // namespace detail

/// Parses "YYYY-MM-DDTHH:MM:SS" with an optional trailing 'Z' (a space is also
/// accepted as the date/time separator).
inline Instant parse_utc(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && (s.back() == 'Z' || s.back() == 'z')) s.remove_suffix(1);
  int Y, M, D, h, m, sec;
  if (!detail::parse_fields(s, "%4d-%2d-%2dT%2d:%2d:%2d", Y, M, D, h, m, sec) &&
      !detail::parse_fields(s, "%4d-%2d-%2d %2d:%2d:%2d", Y, M, D, h, m, sec)) {
    throw InvalidArgument("unparseable UTC timestamp: '" + std::string(text) + "'");
  }
  return detail::make_instant(Y, M, D, h, m, sec, text);
}

/// Parses the compact "YYYYMMDDHHMMSS" form used for image file names.
inline Instant parse_compact(std::string_view text) {
  int Y, M, D, h, m, sec;
  if (text.size() != 14 ||
      !detail::parse_fields(text, "%4d%2d%2d%2d%2d%2d", Y, M, D, h, m, sec)) {
    throw InvalidArgument("not a YYYYMMDDHHMMSS stamp: '" + std::string(text) + "'");
  }
  return detail::make_instant(Y, M, D, h, m, sec, text);
}

struct CivilTime {
  int year, month, day, hour, minute, second;
};

inline CivilTime to_civil(Instant t) {
  using namespace std::chrono;
  const auto days = floor<std::chrono::days>(t);
  const year_month_day ymd{days};
  const hh_mm_ss hms{t - days};
  return {static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
          static_cast<int>(static_cast<unsigned>(ymd.day())), static_cast<int>(hms.hours().count()),
          static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count())};
}

inline std::string format_utc(Instant t) {
  const CivilTime c = to_civil(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year, c.month, c.day, c.hour,
                c.minute, c.second);
  return buf;
}

inline std::string format_compact(Instant t) {
  const CivilTime c = to_civil(t);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04d%02d%02d%02d%02d%02d", c.year, c.month, c.day, c.hour,
                c.minute, c.second);
  return buf;
}

/// "YYYYMMDD" directory name for the day containing t.
inline std::string day_dir_name(Instant t) { return format_compact(t).substr(0, 8); }

/// Seconds elapsed since 00:00:00 UTC of t's day.
inline long seconds_of_day(Instant t) {
  using namespace std::chrono;
  return static_cast<long>((t - floor<days>(t)).count());
}

/// Whole days since 1970-01-01 (floor).
inline long day_number(Instant t) {
  using namespace std::chrono;
  return static_cast<long>(floor<days>(t).time_since_epoch().count());
}

/// Julian date (UT) of t.
inline double julian_date(Instant t) {
  return 2440587.5 + static_cast<double>(t.time_since_epoch().count()) / 86400.0;
}

}  // namespace spin
