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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace iwcode::detail {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <typename F>
double sum_over(std::size_t count, F&& term) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < count; ++i) acc.add(term(i));
  return acc.value();
}

inline double log_base(double x, int base) {
  if (base == 2) return std::log2(x);
  return std::log(x) / std::log(static_cast<double>(base));
}

/// log(sum(exp(v))) without overflow.
inline double log_sum_exp(std::span<const double> v) {
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  CompensatedSum acc;
  for (double x : v) acc.add(std::exp(x - m));
  return m + std::log(acc.value());
}

/// Ceiling that treats values within `tol` of an integer as that integer.
inline long long snapped_ceil(double x, double tol = 1e-11) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

}  // namespace iwcode::detail
