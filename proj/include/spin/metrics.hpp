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
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spin/error.hpp"
#include "spin/time.hpp"

namespace spin {

struct ForecastPair {
  double predicted = 0.0;
  double observed = 0.0;
};

/// Aligned (predicted, observed) pairs at one horizon.
struct ForecastSet {
  std::vector<ForecastPair> pairs;
  Seconds horizon{0};

  std::size_t size() const noexcept { return pairs.size(); }

  void require_nonempty(const char* what) const {
    if (pairs.empty()) throw InvalidArgument(std::string(what) + ": empty forecast set");
    for (const auto& p : pairs) {
      if (!std::isfinite(p.predicted) || !std::isfinite(p.observed)) {
        throw InvalidArgument(std::string(what) + ": non-finite value in forecast set");
      }
    }
  }
};

inline double rmse(const ForecastSet& fs) {
  fs.require_nonempty("rmse");
  double acc = 0.0;
  for (const auto& p : fs.pairs) acc += (p.predicted - p.observed) * (p.predicted - p.observed);
  return std::sqrt(acc / fs.size());
}

inline double mae(const ForecastSet& fs) {
  fs.require_nonempty("mae");
  double acc = 0.0;
  for (const auto& p : fs.pairs) acc += std::abs(p.predicted - p.observed);
  return acc / fs.size();
}

/// 1 - err_model / err_baseline.
inline double forecast_skill(double err_model, double err_baseline) {
  if (!(err_baseline > 0.0)) {
    throw UndefinedSkill("forecast skill undefined for baseline error " + std::to_string(err_baseline));
  }
  return 1.0 - err_model / err_baseline;
}

/// Nearest-rank 95th percentile of |predicted - observed|: the element at
/// ceil(0.95 n) - 1 of the ascending absolute errors.
inline double quantile95_abs_error(const ForecastSet& fs) {
  fs.require_nonempty("quantile95_abs_error");
  std::vector<double> err;
  err.reserve(fs.size());
  for (const auto& p : fs.pairs) err.push_back(std::abs(p.predicted - p.observed));
  // ceil(0.95 n) computed in integers: (95 n + 99) / 100.
  const std::size_t rank = (95 * err.size() + 99) / 100;
  const std::size_t k = rank - 1;
  std::nth_element(err.begin(), err.begin() + static_cast<std::ptrdiff_t>(k), err.end());
  return err[k];
}

using WarpPath = std::vector<std::pair<std::size_t, std::size_t>>;

struct DtwResult {
  double cost = 0.0;
  WarpPath path;  // (index into a, index into b), from (0,0) to (n-1,m-1)
};

/// Unconstrained DTW with |a_i - b_j| local cost.
///
/// The path is recovered by backtracking from (n-1, m-1); among predecessors
/// of equal accumulated cost the diagonal wins, then the one reached by a
/// (0,1) step, then the one reached by a (1,0) step.
inline DtwResult dtw_path(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("dtw_path: empty sequence");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> acc(n * m, inf);
  auto D = [&](std::size_t i, std::size_t j) -> double& { return acc[i * m + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double c = std::abs(a[i] - b[j]);
      if (i == 0 && j == 0) {
        D(i, j) = c;
        continue;
      }
      double best = inf;
      if (i > 0 && j > 0) best = D(i - 1, j - 1);
      if (j > 0) best = std::min(best, D(i, j - 1));
      if (i > 0) best = std::min(best, D(i - 1, j));
      D(i, j) = c + best;
    }
  }

  DtwResult out;
  out.cost = D(n - 1, m - 1);
  std::size_t i = n - 1;
  std::size_t j = m - 1;
  out.path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = D(i - 1, j - 1);
      const double left = D(i, j - 1);
      const double up = D(i - 1, j);
      if (diag <= left && diag <= up) {
        --i;
        --j;
      } else if (left <= up) {
        --j;
      } else {
        --i;
      }
    }
    out.path.emplace_back(i, j);
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

/// Temporal distortion of a forecast window, in percent of the maximal
/// distortion n(n-1)/2.
///
/// `late` counts grid cells enclosed between the warp path and the diagonal
/// where a prediction sample is matched to an earlier truth sample (the
/// forecast lags); `advance` counts the mirror region (the forecast leads).
struct TdiResult {
  double tdi = 0.0;
  double advance = 0.0;
  double late = 0.0;
  WarpPath path;  // (prediction index, truth index)
};

namespace detail {

inline std::optional<std::vector<double>> min_max_normalise(std::span<const double> x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return std::nullopt;
  // Snapping to a 2^-32 grid keeps DTW sums exact, so ties (and therefore the
  // chosen path) do not depend on rounding noise from the input scale.
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::ldexp(std::nearbyint(std::ldexp((x[i] - *lo) / range, 32)), -32);
  }
  return out;
}

}  // namespace detail

/// Cell counts of the two regions between `path` and the diagonal of an n x n grid.
inline std::pair<std::size_t, std::size_t> distortion_cells(const WarpPath& path, std::size_t n) {
  std::vector<std::size_t> max_pred_for_truth(n, 0);
  std::vector<std::size_t> max_truth_for_pred(n, 0);
  for (auto [i, j] : path) {
    max_pred_for_truth[j] = std::max(max_pred_for_truth[j], i);
    max_truth_for_pred[i] = std::max(max_truth_for_pred[i], j);
  }
  std::size_t late = 0;
  std::size_t advance = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (max_pred_for_truth[k] > k) late += max_pred_for_truth[k] - k;
    if (max_truth_for_pred[k] > k) advance += max_truth_for_pred[k] - k;
  }
  return {advance, late};
}

/// TDI of `pred` against `truth` after min-max normalising each window to
/// [0,1]. Returns nullopt for a degenerate window (either side constant).
inline std::optional<TdiResult> tdi(std::span<const double> pred, std::span<const double> truth) {
  if (pred.size() != truth.size()) throw InvalidArgument("tdi: windows differ in length");
  if (pred.size() < 2) throw InvalidArgument("tdi: window length must be >= 2");
  for (double v : pred) {
    if (!std::isfinite(v)) throw InvalidArgument("tdi: non-finite prediction");
  }
  for (double v : truth) {
    if (!std::isfinite(v)) throw InvalidArgument("tdi: non-finite observation");
  }
  const auto p = detail::min_max_normalise(pred);
  const auto t = detail::min_max_normalise(truth);
  if (!p || !t) return std::nullopt;

  const std::size_t n = pred.size();
  TdiResult out;
  out.path = dtw_path(*p, *t).path;
  const auto [adv, late] = distortion_cells(out.path, n);
  const double max_area = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  out.advance = 100.0 * static_cast<double>(adv) / max_area;
  out.late = 100.0 * static_cast<double>(late) / max_area;
  out.tdi = 100.0 * static_cast<double>(adv + late) / max_area;
  return out;
}

/// Mean TDI over evaluated windows; degenerate windows are counted separately.
struct TdiSummary {
  double tdi = 0.0;
  double advance = 0.0;
  double late = 0.0;
  std::size_t windows = 0;
  std::size_t degenerate = 0;
};

inline void accumulate(TdiSummary& s, const std::optional<TdiResult>& r) {
  if (!r) {
    ++s.degenerate;
    return;
  }
  const double k = static_cast<double>(s.windows);
  s.tdi = (s.tdi * k + r->tdi) / (k + 1);
  s.advance = (s.advance * k + r->advance) / (k + 1);
  s.late = (s.late * k + r->late) / (k + 1);
  ++s.windows;
}

}  // namespace spin
