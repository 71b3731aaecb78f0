#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "iwcode/source_model.hpp"
#include "support/generators.hpp"

using namespace iwcode;
using Catch::Approx;

// Expected values below come from tests/oracle/derive_expected.py (mpmath, 40 digits).

TEST_CASE("Distribution validation", "[source_model]") {
  CHECK_THROWS_AS(Distribution({1.0}), InputError);
  CHECK_THROWS_AS(Distribution({0.5, 0.5, 0.0}), InputError);
  CHECK_THROWS_AS(Distribution({0.6, 0.6}), InputError);
  CHECK_THROWS_AS(Distribution({-0.1, 1.1}), InputError);
  CHECK_THROWS_AS(Distribution({NAN, 0.5}), InputError);
  CHECK_NOTHROW(Distribution({0.5, 0.5 + 5e-10}));

  SECTION("renormalization is opt-in") {
    const Distribution d({2.0, 6.0}, Renormalize::yes);
    CHECK(d[0] == Approx(0.25));
    CHECK(d[1] == Approx(0.75));
  }
}

TEST_CASE("WeightVector, omega and base validation", "[source_model]") {
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), InputError);
  CHECK_THROWS_AS(WeightVector({1.0, INFINITY}), InputError);
  CHECK_THROWS_AS(ImportanceCoefficient(NAN), InputError);
  CHECK_THROWS_AS(ImportanceCoefficient(INFINITY), InputError);
  CHECK_THROWS_AS(CodeBase(1), InputError);
  CHECK(CodeBase().radix() == 2);
}

TEST_CASE("mim_total", "[source_model]") {
  const Distribution d({0.8, 0.2});
  CHECK(mim_total(d, ImportanceCoefficient(0.0)) == 1.0);
  CHECK(mim_total(d, ImportanceCoefficient(1.0)) == Approx(1.4222303922266294).margin(1e-5));
  for (double w : {-3.0, 0.5, 7.0}) {
    CHECK(mim_total(Distribution({0.5, 0.5}), ImportanceCoefficient(w)) ==
          Approx(std::exp(0.5 * w)).epsilon(1e-14));
  }
}

TEST_CASE("mim_factor", "[source_model]") {
  CHECK(mim_factor(1.0, ImportanceCoefficient(5.0)) == 1.0);
  CHECK(mim_factor(0.2, ImportanceCoefficient(1.0)) == Approx(0.4451081856984935).margin(1e-5));
  CHECK(mim_factor(0.5, ImportanceCoefficient(0.0)) == 0.5);
  CHECK_THROWS_AS(mim_factor(0.0, ImportanceCoefficient(1.0)), InputError);
}

TEST_CASE("mim_normalized", "[source_model]") {
  const Distribution d({0.8, 0.2});
  const auto q0 = mim_normalized(d, ImportanceCoefficient(0.0));
  CHECK(q0 == std::vector<double>{0.8, 0.2});

  const auto q1 = mim_normalized(d, ImportanceCoefficient(1.0));
  CHECK(q1[0] == Approx(0.6870351047683374).margin(1e-5));
  CHECK(q1[1] == Approx(0.3129648952316626).margin(1e-5));

  const Distribution uniform({0.25, 0.25, 0.25, 0.25});
  for (double w : {-9.0, 2.5, 1e4}) {
    for (double q : mim_normalized(uniform, ImportanceCoefficient(w))) CHECK(q == Approx(0.25));
  }
}

TEST_CASE("mim_normalized stays finite for large |omega|", "[source_model]") {
  const Distribution d({0.7, 0.2, 0.1});
  for (double w : {-1e4, -800.0, 800.0, 1e4}) {
    const auto q = mim_normalized(d, ImportanceCoefficient(w));
    double total = 0.0;
    for (double x : q) {
      CHECK(std::isfinite(x));
      CHECK(x >= 0.0);
      total += x;
    }
    CHECK(total == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("mim_weights", "[source_model]") {
  const Distribution d({0.8, 0.2});
  const auto ones = mim_weights(d, ImportanceCoefficient(0.0));
  CHECK(ones == WeightVector::ones(2));

  const auto w = mim_weights(d, ImportanceCoefficient(1.0));
  CHECK(w[0] == Approx(0.8587938809604217).margin(1e-5));
  CHECK(w[1] == Approx(1.5648244761583132).margin(1e-5));

  const auto half = mim_weights(Distribution({0.5, 0.5}), ImportanceCoefficient(3.0));
  CHECK(half[0] == Approx(1.0).margin(1e-15));
  CHECK(half[1] == Approx(1.0).margin(1e-15));
}

TEST_CASE("MIM properties on random sources", "[source_model][property]") {
  testing::Rng rng(0x51);
  std::uniform_real_distribution<double> omega_draw(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = testing::random_distribution(rng, testing::random_size(rng, 2, 12));
    const ImportanceCoefficient omega(omega_draw(rng));

    const auto q = mim_normalized(d, omega);
    CHECK(std::accumulate(q.begin(), q.end(), 0.0) == Approx(1.0).margin(1e-12));
    for (double x : q) {
      CHECK(x > 0.0);
      CHECK(x < 1.0);
    }

    double direct = 0.0;
    for (double p : d.probs()) direct += mim_factor(p, omega);
    CHECK(mim_total(d, omega) == Approx(direct).margin(1e-12));

    const auto w = mim_weights(d, omega);
    double hw = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) hw += d[i] * w[i];
    CHECK(hw == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("MIM focuses by sign of omega on a Bernoulli grid", "[source_model][property]") {
  for (int k = 51; k < 100; ++k) {
    const double p1 = k / 100.0;
    const Distribution d({p1, 1.0 - p1});
    for (double w : {-8.0, -1.0, -0.1}) {
      CHECK(mim_normalized(d, ImportanceCoefficient(w))[0] > p1);
    }
    for (double w : {0.1, 1.0, 8.0}) {
      CHECK(mim_normalized(d, ImportanceCoefficient(w))[0] < p1);
    }
  }
}
