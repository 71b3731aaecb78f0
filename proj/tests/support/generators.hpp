#pragma once

// Seeded random instances for the property suites.

#include <cstddef>
#include <random>
#include <vector>

#include "iwcode/source_model.hpp"

namespace iwcode::testing {

using Rng = std::mt19937_64;

inline Distribution random_distribution(Rng& rng, std::size_t n) {
  // Exponential draws normalized: uniform on the simplex, floored away from 0.
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> p(n);
  for (double& x : p) x = draw(rng) + 1e-3;
  return Distribution(std::move(p), Renormalize::yes);
}

inline WeightVector random_weights(Rng& rng, std::size_t n, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> draw(lo, hi);
  std::vector<double> w(n);
  for (double& x : w) x = draw(rng);
  return WeightVector(std::move(w));
}

inline std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace iwcode::testing
