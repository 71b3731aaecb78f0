#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "iwcode/experiments.hpp"
#include "iwcode/io.hpp"

using namespace iwcode;
using Catch::Approx;

namespace {

const CodeBase kBinary(2);

template <typename Row>
const Row& at_p1(const std::vector<Row>& rows, double p1) {
  for (const auto& r : rows) {
    if (std::abs(r.p1 - p1) < 1e-12) return r;
  }
  FAIL("grid has no point " << p1);
  return rows.front();
}

}  // namespace

TEST_CASE("probability_grid", "[experiments]") {
  const auto grid = probability_grid();
  REQUIRE(grid.size() == 99);
  CHECK(grid.front() == 0.01);
  CHECK(grid[49] == 0.5);
  CHECK(grid.back() == 0.99);
  CHECK(probability_grid(0.25) == std::vector<double>{0.25, 0.5, 0.75});
  CHECK(probability_grid(0.3).size() == 3);
  CHECK_THROWS_AS(probability_grid(0.0), InputError);
  CHECK_THROWS_AS(probability_grid(1.5), InputError);
}

TEST_CASE("sweep_lengths_fig1", "[experiments]") {
  const auto grid = probability_grid();
  for (const auto& r : sweep_lengths_fig1(ImportanceCoefficient(0.0), grid, kBinary)) {
    CHECK(r.iw_len1 == r.shannon_len1);
  }

  const auto neg = sweep_lengths_fig1(ImportanceCoefficient(-1.0), grid, kBinary);
  const auto& r08 = at_p1(neg, 0.8);
  CHECK(r08.shannon_len1 == Approx(0.3219280948873623).margin(1e-5));
  CHECK(r08.iw_len1 == Approx(0.1854896946208840).margin(1e-4));
  CHECK(r08.iw_len1 < r08.shannon_len1);

  const auto pos = sweep_lengths_fig1(ImportanceCoefficient(1.0), grid, kBinary);
  const auto& r09 = at_p1(pos, 0.9);
  CHECK(r09.shannon_len1 == Approx(0.1520030934450500).margin(1e-5));
  CHECK(r09.iw_len1 == Approx(0.3187880596632047).margin(1e-3));
  CHECK(r09.iw_len1 > r09.shannon_len1);

  const std::vector<double> bad{0.5, 1.0};
  CHECK_THROWS_AS(sweep_lengths_fig1(ImportanceCoefficient(1.0), bad, kBinary), InputError);
}

TEST_CASE("sweep_bounds_fig2", "[experiments]") {
  const auto grid = probability_grid();
  const auto w1 = sweep_bounds_fig2(ImportanceCoefficient(1.0), grid, kBinary);
  const auto& a = at_p1(w1, 0.2);
  CHECK(a.mim.lower == Approx(0.8965663270368011).margin(1e-4));
  CHECK(a.shannon.lower == Approx(0.7219280948873623).margin(1e-5));
  CHECK(a.mim.lower > a.shannon.lower);

  const auto w8 = sweep_bounds_fig2(ImportanceCoefficient(8.0), grid, kBinary);
  const auto& b = at_p1(w8, 0.2);
  CHECK(b.mim.lower == Approx(0.2036841573725246).margin(1e-3));
  CHECK(b.mim.lower < b.shannon.lower);

  for (double omega : {-4.0, 1.0, 4.0, 8.0}) {
    const auto rows = sweep_bounds_fig2(ImportanceCoefficient(omega), grid, kBinary);
    const auto& mid = at_p1(rows, 0.5);
    CHECK(mid.mim.lower == 1.0);
    CHECK(mid.shannon.lower == 1.0);
    for (const auto& r : rows) {
      for (const auto& bounds : {r.shannon, r.uisc, r.mim}) {
        CHECK(bounds.well_formed());
        CHECK(bounds.width() == Approx(1.0).margin(1e-12));
      }
    }
  }
}

TEST_CASE("counterexample_report", "[experiments]") {
  const auto rows = counterexample_report(probability_grid());
  const auto& hi = at_p1(rows, 0.8);
  CHECK(hi.gk_lhs == 1.5);
  CHECK(hi.gk_rhs == Approx(1.2).margin(1e-15));
  CHECK_FALSE(hi.holds);
  CHECK(hi.status == KraftStatus::violated);

  const auto& mid = at_p1(rows, 0.5);
  CHECK(mid.gk_rhs == 1.5);
  CHECK(mid.holds);
  CHECK(mid.status == KraftStatus::boundary);

  const auto& lo = at_p1(rows, 0.3);
  CHECK(lo.gk_rhs == Approx(1.7).margin(1e-15));
  CHECK(lo.status == KraftStatus::holds);

  for (const auto& r : rows) {
    CHECK(r.kraft_sum == 1.0);
    CHECK(r.holds == (r.p1 <= 0.5));
  }
}

TEST_CASE("CSV output is schema-conformant and deterministic", "[experiments][io]") {
  const auto grid = probability_grid(0.25);
  std::ostringstream a, b;
  io::write_csv(a, std::span<const BoundsRow>(
                       sweep_bounds_fig2(ImportanceCoefficient(8.0), grid, kBinary)),
                {"omega=8"});
  io::write_csv(b, std::span<const BoundsRow>(
                       sweep_bounds_fig2(ImportanceCoefficient(8.0), grid, kBinary)),
                {"omega=8"});
  CHECK(a.str() == b.str());
  const std::string text = a.str();
  CHECK(text.rfind("# omega=8\np1,shannon_lo,shannon_hi,uisc_lo,uisc_hi,mim_lo,mim_hi\n", 0) == 0);
  CHECK(text.find("\r") == std::string::npos);
  CHECK(text.find("\n0.5,1,2,1,2,1,2\n") != std::string::npos);

  std::ostringstream f1;
  io::write_csv(f1, std::span<const LengthRow>(
                        sweep_lengths_fig1(ImportanceCoefficient(0.0), grid, kBinary)));
  CHECK(f1.str() == "p1,shannon_len1,iw_len1\n0.25,2,2\n0.5,1,1\n0.75,0.415037499,0.415037499\n");

  std::ostringstream ce;
  io::write_csv(ce, std::span<const CounterexampleRow>(counterexample_report(grid)));
  CHECK(ce.str() == "p1,gk_lhs,gk_rhs,holds,kraft_sum\n0.25,1.5,1.75,true,1\n0.5,1.5,1.5,true,1\n"
                    "0.75,1.5,1.25,false,1\n");
}
