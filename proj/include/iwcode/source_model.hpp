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

// Discrete sources, importance weightings and the message-importance (MIM)
// family of weights.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iwcode/detail/numeric.hpp"
#include "iwcode/errors.hpp"

namespace iwcode {

inline constexpr double kProbabilitySumTolerance = 1e-9;

enum class Renormalize { no, yes };

/// Finite discrete source over symbols 0..N-1. Every probability is strictly
/// positive; impossible symbols must be pruned by the caller.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs, Renormalize renormalize = Renormalize::no)
      : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
      throw InputError("distribution needs at least 2 symbols, got " +
                       std::to_string(probs_.size()));
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!std::isfinite(probs_[i]) || probs_[i] <= 0.0) {
        throw InputError("probs[" + std::to_string(i) + "] must be finite and > 0");
      }
    }
    const double total = detail::sum_over(probs_.size(), [&](std::size_t i) { return probs_[i]; });
    if (renormalize == Renormalize::yes) {
      for (double& p : probs_) p /= total;
    } else if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
      throw InputError("probs must sum to 1 (got " + std::to_string(total) + ")");
    }
  }

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
};

/// Positive, finite importance weights (also used for UISC utilities).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!std::isfinite(weights_[i]) || weights_[i] <= 0.0) {
        throw InputError("weights[" + std::to_string(i) + "] must be finite and > 0");
      }
    }
  }

  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

  WeightVector scaled(double c) const {
    std::vector<double> out(weights_);
    for (double& w : out) w *= c;
    return WeightVector(std::move(out));
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/// The MIM parameter omega. Positive values favour rare symbols, negative
/// values favour likely ones.
class ImportanceCoefficient {
 public:
  explicit ImportanceCoefficient(double omega) : omega_(omega) {
    if (!std::isfinite(omega)) throw InputError("omega must be finite");
  }

  double value() const noexcept { return omega_; }

 private:
  double omega_;
};

/// Code alphabet size D. All logarithms in the measures are base D.
class CodeBase {
 public:
  explicit CodeBase(int radix = 2) : radix_(radix) {
    if (radix < 2) throw InputError("code base must be >= 2, got " + std::to_string(radix));
  }

  int radix() const noexcept { return radix_; }

  friend bool operator==(CodeBase, CodeBase) = default;

 private:
  int radix_;
};

inline void require_same_size(const Distribution& dist, std::size_t actual, const char* what) {
  if (actual != dist.size()) throw DimensionMismatch(what, dist.size(), actual);
}

/// p * e^{omega (1 - p)}
inline double mim_factor(double p, ImportanceCoefficient omega) {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("probability must lie in (0, 1]");
  return p * std::exp(omega.value() * (1.0 - p));
}

namespace detail {

inline std::vector<double> log_mim_factors(const Distribution& dist, ImportanceCoefficient omega) {
  std::vector<double> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out[i] = std::log(dist[i]) + omega.value() * (1.0 - dist[i]);
  }
  return out;
}

}  // namespace detail

/// MIM(X; omega) = sum_i p_i e^{omega (1 - p_i)}. Falls back to the log
/// domain when the direct sum overflows (result may then be +inf).
inline double mim_total(const Distribution& dist, ImportanceCoefficient omega) {
  double total = 0.0;
  for (double p : dist.probs()) total += mim_factor(p, omega);
  if (std::isfinite(total) && total > 0.0) return total;
  const auto logs = detail::log_mim_factors(dist, omega);
  return std::exp(detail::log_sum_exp(logs));
}

/// Normalized importance MIM_N(x_i; omega). Stable for |omega| up to ~1e4.
inline std::vector<double> mim_normalized(const Distribution& dist, ImportanceCoefficient omega) {
  if (omega.value() == 0.0) return {dist.probs().begin(), dist.probs().end()};
  auto logs = detail::log_mim_factors(dist, omega);
  const double peak = *std::max_element(logs.begin(), logs.end());
  detail::CompensatedSum total;
  for (double& x : logs) {
    x = std::exp(x - peak);
    total.add(x);
  }
  const double norm = total.value();
  for (double& x : logs) x /= norm;
  return logs;
}

/// w_i = e^{omega (1 - p_i)} / MIM(X; omega), so that p_i w_i = MIM_N(x_i).
inline WeightVector mim_weights(const Distribution& dist, ImportanceCoefficient omega) {
  if (omega.value() == 0.0) return WeightVector::ones(dist.size());
  auto q = mim_normalized(dist, omega);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] /= dist[i];
  return WeightVector(std::move(q));
}

/// Unnormalized utilities u_i = e^{omega (1 - p_i)}, the default UISC
/// utilities when comparing against MIM weighting.
inline WeightVector mim_factor_utilities(const Distribution& dist, ImportanceCoefficient omega) {
  std::vector<double> u(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) u[i] = std::exp(omega.value() * (1.0 - dist[i]));
  return WeightVector(std::move(u));
}

}  // namespace iwcode
