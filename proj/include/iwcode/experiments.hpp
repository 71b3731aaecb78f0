/*
 * Copyright (c) 2026, The iwcode Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Bernoulli-source sweeps comparing ideal lengths and bounds across theories,
// and the utility-weighted Kraft counterexample.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "iwcode/codec.hpp"
#include "iwcode/errors.hpp"
#include "iwcode/measures.hpp"
#include "iwcode/source_model.hpp"

namespace iwcode {

inline constexpr double kDefaultGridStep = 0.01;

/// Points k*step strictly inside (0, 1). When 1/step is an integer M the
/// points are computed as k/M so that 0.5 and friends land exactly.
inline std::vector<double> probability_grid(double step = kDefaultGridStep) {
  if (!std::isfinite(step) || step <= 0.0 || step >= 1.0) {
    throw InputError("grid step must lie in (0, 1)");
  }
  std::vector<double> grid;
  const double inv = 1.0 / step;
  const double m = std::round(inv);
  if (std::abs(inv - m) <= 1e-9 * m) {
    const auto count = static_cast<long long>(m);
    for (long long k = 1; k < count; ++k) grid.push_back(static_cast<double>(k) / m);
  } else {
    for (long long k = 1;; ++k) {
      const double p = static_cast<double>(k) * step;
      if (p >= 1.0) break;
      grid.push_back(p);
    }
  }
  return grid;
}

namespace detail {

inline void require_open_unit(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] < 1.0)) {
      throw InputError("grid point " + std::to_string(i) + " is outside (0, 1)");
    }
  }
}

inline Distribution bernoulli(double p1) { return Distribution({p1, 1.0 - p1}); }

}  // namespace detail

struct LengthRow {
  double p1 = 0.0;
  double shannon_len1 = 0.0;  // -log_D p1
  double iw_len1 = 0.0;       // -log_D MIM_N(x1; omega)
};

struct BoundsRow {
  double p1 = 0.0;
  BoundsReport shannon;
  BoundsReport uisc;
  BoundsReport mim;
};

enum class KraftStatus { holds, boundary, violated };

inline constexpr std::string_view to_string(KraftStatus s) noexcept {
  switch (s) {
    case KraftStatus::holds: return "holds";
    case KraftStatus::boundary: return "boundary";
    case KraftStatus::violated: return "violated";
  }
  return "?";
}

struct CounterexampleRow {
  double p1 = 0.0;
  double gk_lhs = 0.0;
  double gk_rhs = 0.0;
  bool holds = false;
  KraftStatus status = KraftStatus::holds;
  double kraft_sum = 0.0;
};

/// Ideal length of x1 under plain and MIM weighting for (p1, 1 - p1).
inline std::vector<LengthRow> sweep_lengths_fig1(ImportanceCoefficient omega,
                                                 std::span<const double> grid, CodeBase base) {
  detail::require_open_unit(grid);
  std::vector<LengthRow> rows;
  rows.reserve(grid.size());
  for (double p1 : grid) {
    const auto dist = detail::bernoulli(p1);
    const auto q = mim_normalized(dist, omega);
    rows.push_back({p1, -detail::log_base(p1, base.radix()),
                    -detail::log_base(q[0], base.radix())});
  }
  return rows;
}

/// Shannon, UISC (utilities e^{omega(1-p_i)}) and MIM bound pairs per p1.
inline std::vector<BoundsRow> sweep_bounds_fig2(ImportanceCoefficient omega,
                                                std::span<const double> grid, CodeBase base) {
  detail::require_open_unit(grid);
  std::vector<BoundsRow> rows;
  rows.reserve(grid.size());
  for (double p1 : grid) {
    const auto dist = detail::bernoulli(p1);
    rows.push_back({p1, shannon_bounds(dist, base),
                    uisc_bounds(dist, mim_factor_utilities(dist, omega), base),
                    mim_bounds(dist, omega, base)});
  }
  return rows;
}

/// Binary code {0, 1} under utilities (1, 2): a valid prefix code that fails
/// the utility-weighted Kraft condition whenever p1 > 1/2.
inline std::vector<CounterexampleRow> counterexample_report(std::span<const double> grid) {
  detail::require_open_unit(grid);
  const CodeBase binary(2);
  const WeightVector utilities({1.0, 2.0});
  const std::vector<int> lengths{1, 1};
  const double kraft = kraft_sum(lengths, binary);
  std::vector<CounterexampleRow> rows;
  rows.reserve(grid.size());
  for (double p1 : grid) {
    const auto gk = generalized_kraft_check(lengths, utilities, detail::bernoulli(p1), binary);
    const auto status = gk.lhs < gk.rhs    ? KraftStatus::holds
                        : gk.lhs == gk.rhs ? KraftStatus::boundary
                                           : KraftStatus::violated;
    rows.push_back({p1, gk.lhs, gk.rhs, gk.holds, status, kraft});
  }
  return rows;
}

}  // namespace iwcode
