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

// JSON schemas (source files, bounds, codes, product sources) and the CSV
// layouts of the sweep outputs.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "iwcode/codec.hpp"
#include "iwcode/errors.hpp"
#include "iwcode/experiments.hpp"
#include "iwcode/measures.hpp"
#include "iwcode/sequence.hpp"
#include "iwcode/source_model.hpp"

namespace iwcode::io {

using json = nlohmann::json;

/// Round to `digits` significant digits so JSON output is stable.
inline double round_sig(double x, int digits = 12) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline std::string format_real(double x, int digits = 9) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// ---------------------------------------------------------------------------
// Source files: {"probs": [...], "weights": [...]?, "omega": x?, "base": D?}

enum class WeightingKind { ones, weights, mim };

struct SourceFile {
  std::vector<double> probs;
  std::optional<std::vector<double>> weights;
  std::optional<double> omega;
  int base = 2;

  /// Checks the cross-field rules and the Distribution invariants.
  void validate() const {
    if (weights && omega) {
      throw InputError("source: give either weights or omega, not both");
    }
    (void)distribution();
    (void)code_base();
    if (weights) (void)weighting();
    if (omega) (void)ImportanceCoefficient(*omega);
  }

  Distribution distribution() const {
    try {
      return Distribution(probs);
    } catch (const InputError& e) {
      throw InputError(std::string("source.probs: ") + e.what());
    }
  }

  CodeBase code_base() const {
    try {
      return CodeBase(base);
    } catch (const InputError& e) {
      throw InputError(std::string("source.base: ") + e.what());
    }
  }

  WeightingKind weighting_kind() const {
    if (omega) return WeightingKind::mim;
    if (weights) return WeightingKind::weights;
    return WeightingKind::ones;
  }

  /// Explicit weights, MIM weights for omega, or all ones.
  WeightVector weighting() const {
    const auto dist = distribution();
    if (omega) return mim_weights(dist, ImportanceCoefficient(*omega));
    if (!weights) return WeightVector::ones(dist.size());
    try {
      WeightVector w(*weights);
      require_same_size(dist, w.size(), "weights");
      return w;
    } catch (const InputError& e) {
      throw InputError(std::string("source.weights: ") + e.what());
    }
  }
};

namespace detail {

inline std::vector<double> real_array(const json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string(field) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError(std::string(field) + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline SourceFile source_from_json(const json& j) {
  if (!j.is_object()) throw InputError("source: expected a JSON object");
  SourceFile s;
  if (!j.contains("probs")) throw InputError("source.probs: missing");
  s.probs = detail::real_array(j.at("probs"), "source.probs");
  if (j.contains("weights") && !j.at("weights").is_null()) {
    s.weights = detail::real_array(j.at("weights"), "source.weights");
  }
  if (j.contains("omega") && !j.at("omega").is_null()) {
    if (!j.at("omega").is_number()) throw InputError("source.omega: expected a number");
    s.omega = j.at("omega").get<double>();
  }
  if (j.contains("base")) {
    if (!j.at("base").is_number_integer()) throw InputError("source.base: expected an integer");
    s.base = j.at("base").get<int>();
  }
  return s;
}

inline SourceFile parse_source(const std::string& text) {
  return source_from_json(detail::parse_text(text, "source"));
}

inline SourceFile load_source(const std::string& path) {
  return source_from_json(detail::parse_text(detail::read_file(path), path));
}

inline json to_json(const SourceFile& s) {
  json j{{"probs", s.probs}, {"base", s.base}};
  if (s.weights) j["weights"] = *s.weights;
  if (s.omega) j["omega"] = *s.omega;
  return j;
}

// ---------------------------------------------------------------------------

inline json to_json(const BoundsReport& b) {
  return {{"theory", std::string(to_string(b.theory))},
          {"lower", round_sig(b.lower)},
          {"upper", round_sig(b.upper)}};
}

inline BoundsReport bounds_from_json(const json& j) {
  BoundsReport b;
  const auto tag = j.at("theory").get<std::string>();
  if (tag == "shannon") b.theory = Theory::shannon;
  else if (tag == "uisc") b.theory = Theory::uisc;
  else if (tag == "iw") b.theory = Theory::iw;
  else if (tag == "mim") b.theory = Theory::mim;
  else throw InputError("bounds.theory: unknown tag '" + tag + "'");
  b.lower = j.at("lower").get<double>();
  b.upper = j.at("upper").get<double>();
  return b;
}

inline json to_json(const CodeSpec& code) {
  return {{"base", code.base().radix()},
          {"lengths", std::vector<int>(code.lengths().begin(), code.lengths().end())},
          {"codewords",
           std::vector<std::string>(code.codewords().begin(), code.codewords().end())}};
}

inline CodeSpec code_from_json(const json& j) {
  try {
    return CodeSpec(j.at("lengths").get<std::vector<int>>(),
                    j.at("codewords").get<std::vector<std::string>>(),
                    CodeBase(j.value("base", 2)));
  } catch (const json::exception& e) {
    throw InputError(std::string("code: ") + e.what());
  }
}

inline json to_json(const ProductSource& ps) {
  std::vector<double> p(ps.joint_probs().begin(), ps.joint_probs().end());
  std::vector<double> w(ps.joint_weights().begin(), ps.joint_weights().end());
  json j{{"n", ps.n()}, {"joint_probs", p}, {"joint_weights", w}};
  if (ps.marginal()) {
    j["probs"] = std::vector<double>(ps.marginal()->probs().begin(), ps.marginal()->probs().end());
  }
  if (ps.marginal_weights()) {
    j["weights"] = std::vector<double>(ps.marginal_weights()->values().begin(),
                                       ps.marginal_weights()->values().end());
  }
  return j;
}

/// Reads explicit joint tables; marginal fields, if present, are ignored.
inline ProductSource product_source_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("joint_probs") ||
      !j.contains("joint_weights")) {
    throw InputError("product source: expected fields n, joint_probs, joint_weights");
  }
  if (!j.at("n").is_number_integer()) throw InputError("product source.n: expected an integer");
  return ProductSource(j.at("n").get<int>(), detail::real_array(j.at("joint_probs"), "joint_probs"),
                       detail::real_array(j.at("joint_weights"), "joint_weights"));
}

// ---------------------------------------------------------------------------
// CSV. Metadata lines start with '#', then the header, then one row per grid
// point. Reals carry 9 significant digits; lines end in a single '\n'.

inline void write_metadata(std::ostream& out, const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
}

inline void write_csv(std::ostream& out, std::span<const LengthRow> rows,
                      const std::vector<std::string>& metadata = {}) {
  write_metadata(out, metadata);
  out << "p1,shannon_len1,iw_len1\n";
  for (const auto& r : rows) {
    out << format_real(r.p1) << ',' << format_real(r.shannon_len1) << ','
        << format_real(r.iw_len1) << '\n';
  }
}

inline void write_csv(std::ostream& out, std::span<const BoundsRow> rows,
                      const std::vector<std::string>& metadata = {}) {
  write_metadata(out, metadata);
  out << "p1,shannon_lo,shannon_hi,uisc_lo,uisc_hi,mim_lo,mim_hi\n";
  for (const auto& r : rows) {
    out << format_real(r.p1) << ',' << format_real(r.shannon.lower) << ','
        << format_real(r.shannon.upper) << ',' << format_real(r.uisc.lower) << ','
        << format_real(r.uisc.upper) << ',' << format_real(r.mim.lower) << ','
        << format_real(r.mim.upper) << '\n';
  }
}

inline void write_csv(std::ostream& out, std::span<const CounterexampleRow> rows,
                      const std::vector<std::string>& metadata = {}) {
  write_metadata(out, metadata);
  out << "p1,gk_lhs,gk_rhs,holds,kraft_sum\n";
  for (const auto& r : rows) {
    out << format_real(r.p1) << ',' << format_real(r.gk_lhs) << ',' << format_real(r.gk_rhs)
        << ',' << (r.holds ? "true" : "false") << ',' << format_real(r.kraft_sum) << '\n';
  }
}

}  // namespace iwcode::io
