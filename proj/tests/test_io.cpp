#include <catch2/catch_amalgamated.hpp>

#include "iwcode/io.hpp"

using namespace iwcode;
using Catch::Approx;

TEST_CASE("source files parse and validate", "[io]") {
  const auto s = io::parse_source(R"({"probs": [0.8, 0.2], "weights": [1, 2], "base": 3})");
  CHECK(s.probs == std::vector<double>{0.8, 0.2});
  REQUIRE(s.weights);
  CHECK(*s.weights == std::vector<double>{1.0, 2.0});
  CHECK(s.base == 3);
  CHECK_NOTHROW(s.validate());
  CHECK(s.weighting_kind() == io::WeightingKind::weights);

  const auto m = io::parse_source(R"({"probs": [0.8, 0.2], "omega": 1})");
  CHECK(m.base == 2);
  CHECK(m.weighting_kind() == io::WeightingKind::mim);
  CHECK(m.weighting()[1] == Approx(1.5648244761583132).margin(1e-12));

  const auto plain = io::parse_source(R"({"probs": [0.5, 0.5]})");
  CHECK(plain.weighting() == WeightVector::ones(2));
}

TEST_CASE("source file errors name the field", "[io]") {
  auto message_of = [](const std::string& text) {
    try {
      io::parse_source(text).validate();
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK_THAT(message_of(R"({"probs": [0.5, 0.5], "weights": [1, 1], "omega": 2})"),
             Catch::Matchers::ContainsSubstring("either weights or omega"));
  CHECK_THAT(message_of(R"({"probs": [0.6, 0.6]})"),
             Catch::Matchers::ContainsSubstring("source.probs"));
  CHECK_THAT(message_of(R"({"probs": [0.5, 0.5], "weights": [1]})"),
             Catch::Matchers::ContainsSubstring("source.weights"));
  CHECK_THAT(message_of(R"({"probs": [0.5, 0.5], "base": 1})"),
             Catch::Matchers::ContainsSubstring("source.base"));
  CHECK_THAT(message_of(R"({"probs": "x"})"), Catch::Matchers::ContainsSubstring("source.probs"));
  CHECK_THAT(message_of(R"({"weights": [1]})"), Catch::Matchers::ContainsSubstring("missing"));
  CHECK_THAT(message_of("{not json"), Catch::Matchers::ContainsSubstring("source"));
}

TEST_CASE("bounds report JSON keys", "[io]") {
  const BoundsReport b{1.1019550008653874, 2.3019550008653874, Theory::iw};
  const auto j = io::to_json(b);
  CHECK(j.size() == 3);
  CHECK(j.at("theory") == "iw");
  CHECK(j.at("lower").get<double>() == 1.10195500087);
  CHECK(j.dump() == R"({"lower":1.10195500087,"theory":"iw","upper":2.30195500087})");
  const auto back = io::bounds_from_json(j);
  CHECK(back.theory == Theory::iw);
  CHECK(back.lower == Approx(b.lower).margin(1e-11));
}

TEST_CASE("code spec JSON", "[io]") {
  const auto code = canonical_code(std::vector<int>{1, 2, 2}, CodeBase(2));
  const auto j = io::to_json(code);
  CHECK(j.dump() == R"({"base":2,"codewords":["0","10","11"],"lengths":[1,2,2]})");
  CHECK(io::code_from_json(j) == code);
  CHECK_THROWS_AS(io::code_from_json(nlohmann::json::parse(
                      R"({"base":2,"codewords":["0","01"],"lengths":[1,2]})")),
                  InputError);
}

TEST_CASE("product source JSON", "[io]") {
  const auto ps = extend_source(Distribution({0.8, 0.2}), WeightVector({1.0, 2.0}), 2);
  const auto j = io::to_json(ps);
  CHECK(j.at("n") == 2);
  CHECK(j.at("probs").size() == 2);
  CHECK(j.at("joint_weights").get<std::vector<double>>() == std::vector<double>{1, 2, 2, 4});
  const auto back = io::product_source_from_json(j);
  CHECK(back.n() == 2);
  CHECK(std::vector<double>(back.joint_probs().begin(), back.joint_probs().end()) ==
        std::vector<double>(ps.joint_probs().begin(), ps.joint_probs().end()));
  CHECK_THROWS_AS(io::product_source_from_json(nlohmann::json::parse(R"({"n":2})")), InputError);
}

TEST_CASE("round_sig", "[io]") {
  CHECK(io::round_sig(0.1 + 0.2) == 0.3);
  CHECK(io::round_sig(1.0 / 3.0) == 0.333333333333);
  CHECK(io::round_sig(0.0) == 0.0);
  CHECK(io::format_real(1.0 / 3.0) == "0.333333333");
}
