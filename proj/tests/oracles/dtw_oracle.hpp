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

// Exhaustive reference for DTW and TDI: enumerates every monotone warping
// path of an n x m grid. Only usable for short sequences.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

using Path = std::vector<std::pair<std::size_t, std::size_t>>;

// Step codes in backward order of preference: 0 diagonal, 1 (0,1), 2 (1,0).
inline int step_code(std::pair<std::size_t, std::size_t> from, std::pair<std::size_t, std::size_t> to) {
  const bool di = to.first != from.first;
  const bool dj = to.second != from.second;
  if (di && dj) return 0;
  if (dj) return 1;
  return 2;
}

/// Calls visit(path) for every monotone path from (0,0) to (n-1,m-1).
inline void for_each_path(std::size_t n, std::size_t m, const std::function<void(const Path&)>& visit) {
  Path p{{0, 0}};
  std::function<void()> rec = [&] {
    auto [i, j] = p.back();
    if (i == n - 1 && j == m - 1) {
      visit(p);
      return;
    }
    const std::pair<std::size_t, std::size_t> next[3] = {{i + 1, j + 1}, {i, j + 1}, {i + 1, j}};
    for (auto q : next) {
      if (q.first >= n || q.second >= m) continue;
      p.push_back(q);
      rec();
      p.pop_back();
    }
  };
  rec();
}

struct DtwBrute {
  double cost = std::numeric_limits<double>::infinity();
  Path path;
  std::size_t n_optimal = 0;
};

/// Minimum |a_i - b_j| path cost over all paths. Among optimal paths the
/// chosen one minimises the step sequence read backwards from the end, with
/// diagonal < (0,1) < (1,0).
inline DtwBrute dtw_brute(const std::vector<double>& a, const std::vector<double>& b) {
  DtwBrute best;
  std::vector<int> best_key;
  for_each_path(a.size(), b.size(), [&](const Path& p) {
    double c = 0.0;
    for (auto [i, j] : p) c += std::abs(a[i] - b[j]);
    std::vector<int> key;
    for (std::size_t k = p.size() - 1; k > 0; --k) key.push_back(step_code(p[k - 1], p[k]));
    if (c < best.cost) {
      best.cost = c;
      best.path = p;
      best_key = key;
      best.n_optimal = 1;
    } else if (c == best.cost) {
      ++best.n_optimal;
      if (key < best_key) {
        best.path = p;
        best_key = key;
      }
    }
  });
  return best;
}

/// Distortion cells by direct cell test: a cell (i, j) off the diagonal is
/// enclosed when it lies between the diagonal and some path cell of the same
/// truth column j (late, i > j) or the same prediction row i (advance, j > i).
inline std::pair<std::size_t, std::size_t> enclosed_cells(const Path& p, std::size_t n) {
  std::size_t advance = 0, late = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) {
        for (auto q : p) {
          if (q.second == j && q.first >= i) {
            ++late;
            break;
          }
        }
      } else if (j > i) {
        for (auto q : p) {
          if (q.first == i && q.second >= j) {
            ++advance;
            break;
          }
        }
      }
    }
  }
  return {advance, late};
}

inline std::vector<double> minmax(const std::vector<double>& x) {
  double lo = x[0], hi = x[0];
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::vector<double> out;
  for (double v : x) out.push_back(std::ldexp(std::nearbyint(std::ldexp((v - lo) / (hi - lo), 32)), -32));
  return out;
}

struct TdiBrute {
  double tdi = 0.0, advance = 0.0, late = 0.0;
  Path path;
};

inline TdiBrute tdi_brute(const std::vector<double>& pred, const std::vector<double>& truth) {
  const auto r = dtw_brute(minmax(pred), minmax(truth));
  const auto [adv, late] = enclosed_cells(r.path, pred.size());
  const double area = pred.size() * (pred.size() - 1) / 2.0;
  return {100.0 * (adv + late) / area, 100.0 * adv / area, 100.0 * late / area, r.path};
}

}  // namespace oracle
