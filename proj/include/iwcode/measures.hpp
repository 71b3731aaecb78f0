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

// Information measures and the four families of code-length bounds:
// Shannon, UISC (useful information), I-W (importance weighted) and MIM.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "iwcode/detail/numeric.hpp"
#include "iwcode/errors.hpp"
#include "iwcode/source_model.hpp"

namespace iwcode {

enum class Theory { shannon, uisc, iw, mim };

inline constexpr std::string_view to_string(Theory t) noexcept {
  switch (t) {
    case Theory::shannon: return "shannon";
    case Theory::uisc: return "uisc";
    case Theory::iw: return "iw";
    case Theory::mim: return "mim";
  }
  return "?";
}

/// Lower/upper bound pair, in code symbols per source symbol.
struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  Theory theory = Theory::shannon;

  double width() const noexcept { return upper - lower; }
  bool well_formed() const noexcept {
    return std::isfinite(lower) && std::isfinite(upper) && lower >= 0.0 && lower <= upper;
  }
};

namespace detail {

inline double weighted_avg(std::span<const double> p, std::span<const double> w) {
  return sum_over(p.size(), [&](std::size_t i) { return p[i] * w[i]; });
}

// -sum p_i w_i log_D(p_i w_i / H_w), clamped at 0 against rounding.
inline double iw_measure(std::span<const double> p, std::span<const double> w, int base) {
  const double hw = weighted_avg(p, w);
  const double value = -sum_over(p.size(), [&](std::size_t i) {
    const double q = p[i] * w[i];
    return q * log_base(q / hw, base);
  });
  return std::max(0.0, value);
}

inline double entropy(std::span<const double> q, int base) {
  const double value =
      -sum_over(q.size(), [&](std::size_t i) { return q[i] * log_base(q[i], base); });
  return std::max(0.0, value);
}

}  // namespace detail

/// H_w(X) = sum_j p_j w_j
inline double weighted_avg_hw(const Distribution& dist, const WeightVector& w) {
  require_same_size(dist, w.size(), "weights");
  return detail::weighted_avg(dist.probs(), w.values());
}

/// Importance-aware measure L(w, X) = -sum p_i w_i log_D(p_i w_i / H_w).
/// Lower bound on the optimal I-W expected length.
inline double iw_measure(const Distribution& dist, const WeightVector& w, CodeBase base) {
  require_same_size(dist, w.size(), "weights");
  return detail::iw_measure(dist.probs(), w.values(), base.radix());
}

inline BoundsReport iw_bounds(const Distribution& dist, const WeightVector& w, CodeBase base) {
  const double lower = iw_measure(dist, w, base);
  return {lower, lower + weighted_avg_hw(dist, w), Theory::iw};
}

inline double shannon_entropy(const Distribution& dist, CodeBase base) {
  return detail::entropy(dist.probs(), base.radix());
}

inline BoundsReport shannon_bounds(const Distribution& dist, CodeBase base) {
  const double h = shannon_entropy(dist, base);
  return {h, h + 1.0, Theory::shannon};
}

/// First-order useful-information bounds:
/// (-sum u_i p_i log_D p_i) / (sum u_i p_i), plus one for the upper bound.
inline BoundsReport uisc_bounds(const Distribution& dist, const WeightVector& u, CodeBase base) {
  require_same_size(dist, u.size(), "utilities");
  const auto p = dist.probs();
  const double num = -detail::sum_over(p.size(), [&](std::size_t i) {
    return u[i] * p[i] * detail::log_base(p[i], base.radix());
  });
  const double lower = std::max(0.0, num / detail::weighted_avg(p, u.values()));
  return {lower, lower + 1.0, Theory::uisc};
}

/// L_w = sum p_i w_i l_i over integer codeword lengths (each >= 1).
inline double weighted_expected_length(const Distribution& dist, const WeightVector& w,
                                       std::span<const int> lengths) {
  require_same_size(dist, w.size(), "weights");
  require_same_size(dist, lengths.size(), "lengths");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw InputError("lengths[" + std::to_string(i) + "] must be >= 1");
  }
  return detail::sum_over(lengths.size(),
                          [&](std::size_t i) { return dist[i] * w[i] * lengths[i]; });
}

/// Real-valued variant, for evaluating ideal (non-integer) lengths.
inline double weighted_expected_length(const Distribution& dist, const WeightVector& w,
                                       std::span<const double> lengths) {
  require_same_size(dist, w.size(), "weights");
  require_same_size(dist, lengths.size(), "lengths");
  return detail::sum_over(lengths.size(),
                          [&](std::size_t i) { return dist[i] * w[i] * lengths[i]; });
}

/// Entropy of the MIM_N density.
inline double mim_entropy(const Distribution& dist, ImportanceCoefficient omega, CodeBase base) {
  return detail::entropy(mim_normalized(dist, omega), base.radix());
}

inline BoundsReport mim_bounds(const Distribution& dist, ImportanceCoefficient omega,
                               CodeBase base) {
  const double h = mim_entropy(dist, omega, base);
  return {h, h + 1.0, Theory::mim};
}

/// sum_i MIM_N(x_i; omega) l_i
inline double mim_weighted_length(const Distribution& dist, ImportanceCoefficient omega,
                                  std::span<const int> lengths) {
  require_same_size(dist, lengths.size(), "lengths");
  const auto q = mim_normalized(dist, omega);
  return detail::sum_over(q.size(), [&](std::size_t i) { return q[i] * lengths[i]; });
}

}  // namespace iwcode
