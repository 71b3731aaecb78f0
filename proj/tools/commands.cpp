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

#include "commands.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace iwcode::cli {

namespace {

std::string figure_name(Figure f) {
  switch (f) {
    case Figure::fig1: return "fig1";
    case Figure::fig2: return "fig2";
    case Figure::counterexample: return "counterexample";
  }
  return "?";
}

const char* weighting_name(io::WeightingKind k) {
  switch (k) {
    case io::WeightingKind::ones: return "ones";
    case io::WeightingKind::weights: return "weights";
    case io::WeightingKind::mim: return "mim";
  }
  return "?";
}

}  // namespace

io::SourceFile resolve_source(const SourceOptions& opts) {
  io::SourceFile source;
  if (opts.source_path && opts.probs) {
    throw InputError("give either --source or --probs, not both");
  }
  if (opts.source_path) {
    source = io::load_source(*opts.source_path);
  } else if (opts.probs) {
    source.probs = *opts.probs;
  } else {
    throw InputError("a source is required: use --source <path> or --probs a,b,...");
  }
  if (opts.weights) source.weights = opts.weights;
  if (opts.omega) source.omega = opts.omega;
  if (opts.base) source.base = *opts.base;
  source.validate();
  return source;
}

std::size_t sequence_cap_from_env() {
  const char* raw = std::getenv("IWCODE_SEQ_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultProductCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(raw, &end, 10);
  if (*end != '\0' || cap == 0 || raw[0] == '-') {
    throw InputError(std::string("IWCODE_SEQ_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(cap);
}

std::vector<std::size_t> parse_symbols(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  std::size_t index = 0;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("symbol " + std::to_string(index) + " ('" + token +
                         "') is not a non-negative integer");
      }
    }
    out.push_back(static_cast<std::size_t>(std::stoull(token)));
    token.clear();
    ++index;
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

CodeSpec build_code(const io::SourceFile& source, Scheme scheme) {
  const auto dist = source.distribution();
  const auto w = source.weighting();
  const auto base = source.code_base();
  if (scheme == Scheme::huffman) return huffman_weighted(dist, w, base);
  return canonical_code(integer_lengths(dist, w, base), base);
}

json cmd_bounds(const io::SourceFile& source) {
  const auto dist = source.distribution();
  const auto w = source.weighting();
  const auto base = source.code_base();

  const char* utilities = "ones";
  auto u = WeightVector::ones(dist.size());
  if (source.omega) {
    u = mim_factor_utilities(dist, ImportanceCoefficient(*source.omega));
    utilities = "mim_factors";
  } else if (source.weights) {
    u = w;
    utilities = "weights";
  }

  json bounds{{"shannon", io::to_json(shannon_bounds(dist, base))},
              {"uisc", io::to_json(uisc_bounds(dist, u, base))},
              {"iw", io::to_json(iw_bounds(dist, w, base))}};
  if (source.omega) {
    bounds["mim"] = io::to_json(mim_bounds(dist, ImportanceCoefficient(*source.omega), base));
  }

  json out{{"base", base.radix()},
           {"weighting", weighting_name(source.weighting_kind())},
           {"uisc_utilities", utilities},
           {"H", io::round_sig(shannon_entropy(dist, base))},
           {"H_w", io::round_sig(weighted_avg_hw(dist, w))},
           {"iw_measure", io::round_sig(iw_measure(dist, w, base))},
           {"bounds", bounds}};
  if (source.omega) out["omega"] = *source.omega;
  return out;
}

json cmd_code(const io::SourceFile& source, Scheme scheme) {
  const auto dist = source.distribution();
  const auto w = source.weighting();
  const auto base = source.code_base();
  const auto code = build_code(source, scheme);

  json out = io::to_json(code);
  out["scheme"] = scheme == Scheme::huffman ? "huffman" : "ceiling";
  out["weighting"] = weighting_name(source.weighting_kind());
  out["weighted_length"] = io::round_sig(weighted_expected_length(dist, w, code.lengths()));
  out["kraft_sum"] = io::round_sig(kraft_sum(code.lengths(), base));
  out["iw_bounds"] = io::to_json(iw_bounds(dist, w, base));
  out["clamped"] = scheme == Scheme::ceiling && lengths_clamped(dist, w, base);
  return out;
}

std::string cmd_encode(const io::SourceFile& source, Scheme scheme, const std::string& data) {
  return encode(build_code(source, scheme), parse_symbols(data));
}

std::vector<std::size_t> cmd_decode(const io::SourceFile& source, Scheme scheme,
                                    const std::string& digits) {
  std::string trimmed;
  for (char c : digits) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  return decode(build_code(source, scheme), trimmed);
}

json cmd_sequence(const io::SourceFile& source, int n, std::size_t cap, std::ostream& warnings) {
  const auto dist = source.distribution();
  const auto w = source.weighting();
  const auto base = source.code_base();

  json out{{"n", n},
           {"base", base.radix()},
           {"weighting", weighting_name(source.weighting_kind())},
           {"H_w", io::round_sig(weighted_avg_hw(dist, w))},
           {"iw_measure", io::round_sig(iw_measure(dist, w, base))}};
  const auto iid = sequence_bounds_iid(dist, w, n, base);
  out["bounds_iid"] = io::to_json(iid);
  out["bound_width"] = io::round_sig(iid.width());

  try {
    const auto ps = extend_source(dist, w, n, cap);
    const auto check = verify_lemma1(dist, w, n, base, cap);
    out["bounds_general"] = io::to_json(sequence_bounds_general(ps, base));
    out["lemma1"] = {{"hw_joint", io::round_sig(check.hw_joint)},
                     {"hw_power", io::round_sig(check.hw_power)},
                     {"l_joint", io::round_sig(check.l_joint)},
                     {"l_scaled", io::round_sig(check.l_scaled)},
                     {"max_abs_err", check.max_abs_err}};
    std::vector<double> q(ps.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = ps.joint_probs()[i] * ps.joint_weights()[i];
    const auto lengths = huffman_lengths(q, base);
    out["joint_huffman_per_symbol_length"] =
        io::round_sig(per_symbol_weighted_length(ps, lengths));
    out["verification"] = "ok";
  } catch (const CapExceeded& e) {
    warnings << "warning: lemma verification skipped: " << e.what() << '\n';
    out["verification"] = "skipped";
    out["lemma1"] = nullptr;
  }
  return out;
}

std::vector<double> default_omegas(Figure figure) {
  switch (figure) {
    case Figure::fig1: return {-1.0, 1.0};
    case Figure::fig2: return {-4.0, 1.0, 4.0, 8.0};
    case Figure::counterexample: return {};
  }
  return {};
}

void write_sweep(const SweepOptions& opts, std::ostream& out) {
  const auto grid = probability_grid(opts.grid_step);
  const CodeBase base(opts.base);
  std::vector<std::string> meta{"figure=" + figure_name(opts.figure),
                                "grid_step=" + io::format_real(opts.grid_step)};
  if (opts.figure == Figure::counterexample) {
    meta.emplace_back("utilities=1,2 lengths=1,1 base=2");
    io::write_csv(out, std::span<const CounterexampleRow>(counterexample_report(grid)), meta);
    return;
  }
  if (!opts.omega) throw InputError("--omega is required for " + figure_name(opts.figure));
  const ImportanceCoefficient omega(*opts.omega);
  meta.push_back("omega=" + io::format_real(omega.value()));
  meta.push_back("base=" + std::to_string(base.radix()));
  if (opts.figure == Figure::fig1) {
    io::write_csv(out, std::span<const LengthRow>(sweep_lengths_fig1(omega, grid, base)), meta);
  } else {
    meta.emplace_back("uisc_utilities=mim_factors");
    io::write_csv(out, std::span<const BoundsRow>(sweep_bounds_fig2(omega, grid, base)), meta);
  }
}

std::vector<std::string> cmd_sweep(const SweepOptions& opts, const std::string& out_path,
                                   std::ostream& stdout_stream) {
  auto write_to = [](const std::string& path, const SweepOptions& o) {
    std::ostringstream buffer;
    write_sweep(o, buffer);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write " + path);
    file << buffer.str();
    if (!file) throw InputError("failed writing " + path);
  };

  if (opts.figure == Figure::counterexample || opts.omega) {
    if (out_path.empty()) {
      write_sweep(opts, stdout_stream);
      return {};
    }
    write_to(out_path, opts);
    return {out_path};
  }

  if (out_path.empty()) {
    throw InputError("without --omega, --out must name a directory for the default omega set");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_path, ec);
  if (ec) throw InputError("cannot create directory " + out_path + ": " + ec.message());
  std::vector<std::string> written;
  for (double omega : default_omegas(opts.figure)) {
    SweepOptions one = opts;
    one.omega = omega;
    const auto path = (std::filesystem::path(out_path) /
                       (figure_name(opts.figure) + "_omega_" + io::format_real(omega) + ".csv"))
                          .string();
    write_to(path, one);
    written.push_back(path);
  }
  return written;
}

}  // namespace iwcode::cli
