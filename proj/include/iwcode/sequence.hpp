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

// Block (supersymbol) extension of a source and the per-symbol bounds for
// coding n symbols jointly.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iwcode/detail/numeric.hpp"
#include "iwcode/errors.hpp"
#include "iwcode/measures.hpp"
#include "iwcode/source_model.hpp"

namespace iwcode {

inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 20;

/// Joint probabilities and weights over all length-n blocks. Entries are in
/// lexicographic order with the first block position most significant.
class ProductSource {
 public:
  /// Explicit joint tables; need not factor (non-i.i.d. sources).
  ProductSource(int n, std::vector<double> joint_probs, std::vector<double> joint_weights)
      : n_(n), probs_(std::move(joint_probs)), weights_(std::move(joint_weights)) {
    if (n_ < 1) throw InputError("block length n must be >= 1");
    if (probs_.size() != weights_.size()) {
      throw DimensionMismatch("joint_weights", probs_.size(), weights_.size());
    }
    if (probs_.empty()) throw InputError("joint tables are empty");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!std::isfinite(probs_[i]) || probs_[i] <= 0.0) {
        throw InputError("joint_probs[" + std::to_string(i) + "] must be finite and > 0");
      }
      if (!std::isfinite(weights_[i]) || weights_[i] <= 0.0) {
        throw InputError("joint_weights[" + std::to_string(i) + "] must be finite and > 0");
      }
    }
    const double total = detail::sum_over(probs_.size(), [&](std::size_t i) { return probs_[i]; });
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
      throw InputError("joint_probs must sum to 1 (got " + std::to_string(total) + ")");
    }
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> joint_probs() const noexcept { return probs_; }
  std::span<const double> joint_weights() const noexcept { return weights_; }

  /// Per-symbol marginals, present only for sources built by extend_source.
  const std::optional<Distribution>& marginal() const noexcept { return marginal_; }
  const std::optional<WeightVector>& marginal_weights() const noexcept { return marginal_w_; }

 private:
  friend ProductSource extend_source(const Distribution&, const WeightVector&, int, std::size_t);

  ProductSource(int n, std::vector<double> p, std::vector<double> w, Distribution dist,
                WeightVector mw)
      : ProductSource(n, std::move(p), std::move(w)) {
    marginal_.emplace(std::move(dist));
    marginal_w_.emplace(std::move(mw));
  }

  int n_;
  std::vector<double> probs_;
  std::vector<double> weights_;
  std::optional<Distribution> marginal_;
  std::optional<WeightVector> marginal_w_;
};

/// N^n, or nullopt when it does not fit in size_t.
inline std::optional<std::size_t> product_size(std::size_t symbols, int n) {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > std::numeric_limits<std::size_t>::max() / symbols) return std::nullopt;
    total *= symbols;
  }
  return total;
}

/// i.i.d. extension: p(x) and w(x) are products over the block positions.
inline ProductSource extend_source(const Distribution& dist, const WeightVector& w, int n,
                                   std::size_t cap = kDefaultProductCap) {
  require_same_size(dist, w.size(), "weights");
  if (n < 1) throw InputError("block length n must be >= 1");
  const auto needed = product_size(dist.size(), n);
  if (!needed || *needed > cap) {
    throw CapExceeded(needed.value_or(std::numeric_limits<std::size_t>::max()), cap);
  }

  std::vector<double> probs{1.0};
  std::vector<double> weights{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next_p(probs.size() * dist.size());
    std::vector<double> next_w(next_p.size());
    for (std::size_t j = 0; j < probs.size(); ++j) {
      for (std::size_t s = 0; s < dist.size(); ++s) {
        next_p[j * dist.size() + s] = probs[j] * dist[s];
        next_w[j * dist.size() + s] = weights[j] * w[s];
      }
    }
    probs = std::move(next_p);
    weights = std::move(next_w);
  }
  return ProductSource(n, std::move(probs), std::move(weights), dist, w);
}

/// (1/n) sum_x p(x) w(x) l(x)
inline double per_symbol_weighted_length(const ProductSource& ps, std::span<const int> lengths) {
  if (lengths.size() != ps.size()) throw DimensionMismatch("lengths", ps.size(), lengths.size());
  const auto p = ps.joint_probs();
  const auto w = ps.joint_weights();
  return detail::sum_over(lengths.size(), [&](std::size_t i) { return p[i] * w[i] * lengths[i]; }) /
         ps.n();
}

/// H_w over the joint table.
inline double joint_hw(const ProductSource& ps) {
  return detail::weighted_avg(ps.joint_probs(), ps.joint_weights());
}

/// L(w, X^n) over the joint table.
inline double joint_iw_measure(const ProductSource& ps, CodeBase base) {
  return detail::iw_measure(ps.joint_probs(), ps.joint_weights(), base.radix());
}

/// Per-symbol bounds from the joint table: L(w,X^n)/n and that plus H_w(X^n)/n.
inline BoundsReport sequence_bounds_general(const ProductSource& ps, CodeBase base) {
  const double lower = joint_iw_measure(ps, base) / ps.n();
  return {lower, lower + joint_hw(ps) / ps.n(), Theory::iw};
}

/// Closed-form per-symbol bounds for an i.i.d. block:
/// H_w^{n-1} L(w,X) and that plus H_w^n / n. Never enumerates the blocks.
inline BoundsReport sequence_bounds_iid(const Distribution& dist, const WeightVector& w, int n,
                                        CodeBase base) {
  if (n < 1) throw InputError("block length n must be >= 1");
  const double hw = weighted_avg_hw(dist, w);
  const double lower = std::pow(hw, n - 1) * iw_measure(dist, w, base);
  return {lower, lower + std::pow(hw, n) / n, Theory::iw};
}

struct Lemma1Check {
  double hw_joint = 0.0;   // H_w(X^n) by enumeration
  double hw_power = 0.0;   // H_w(X)^n
  double l_joint = 0.0;    // L(w, X^n) by enumeration
  double l_scaled = 0.0;   // n H_w(X)^{n-1} L(w, X)
  double max_abs_err = 0.0;
};

/// Compares the enumerated joint quantities against their product forms.
inline Lemma1Check verify_lemma1(const Distribution& dist, const WeightVector& w, int n,
                                 CodeBase base, std::size_t cap = kDefaultProductCap) {
  const auto ps = extend_source(dist, w, n, cap);
  const double hw = weighted_avg_hw(dist, w);
  Lemma1Check r;
  r.hw_joint = joint_hw(ps);
  r.hw_power = std::pow(hw, n);
  r.l_joint = joint_iw_measure(ps, base);
  r.l_scaled = n * std::pow(hw, n - 1) * iw_measure(dist, w, base);
  r.max_abs_err = std::max(std::abs(r.hw_joint - r.hw_power), std::abs(r.l_joint - r.l_scaled));
  return r;
}

}  // namespace iwcode
