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

// iwcode: importance-weighted code lengths, bounds and prefix codes.

#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using iwcode::cli::Figure;
using iwcode::cli::Scheme;

struct SourceFlags {
  std::string source;
  std::vector<double> probs;
  std::vector<double> weights;
  double omega = 0.0;
  int base = 2;
  CLI::Option* probs_opt = nullptr;
  CLI::Option* weights_opt = nullptr;
  CLI::Option* omega_opt = nullptr;
  CLI::Option* base_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--source", source, "JSON source file {probs, weights?, omega?, base?}");
    probs_opt = app->add_option("--probs", probs, "inline probabilities a,b,...")->delimiter(',');
    weights_opt =
        app->add_option("--weights", weights, "importance weights a,b,...")->delimiter(',');
    omega_opt = app->add_option("--omega", omega, "MIM importance coefficient");
    base_opt = app->add_option("--base", base, "code alphabet size D (default 2)");
  }

  iwcode::io::SourceFile resolve() const {
    iwcode::cli::SourceOptions opts;
    if (!source.empty()) opts.source_path = source;
    if (probs_opt->count() > 0) opts.probs = probs;
    if (weights_opt->count() > 0) opts.weights = weights;
    if (omega_opt->count() > 0) opts.omega = omega;
    if (base_opt->count() > 0) opts.base = base;
    return iwcode::cli::resolve_source(opts);
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return iwcode::io::detail::read_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw iwcode::InputError("cannot write " + out_path);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Importance-weighted source coding: bounds, codes and figure sweeps"};
  app.require_subcommand(1);

  const std::map<std::string, Scheme> schemes{{"ceiling", Scheme::ceiling},
                                              {"huffman", Scheme::huffman}};
  const std::map<std::string, Figure> figures{{"fig1", Figure::fig1},
                                              {"fig2", Figure::fig2},
                                              {"counterexample", Figure::counterexample}};

  SourceFlags bounds_src, code_src, enc_src, dec_src, seq_src;
  Scheme code_scheme = Scheme::huffman, enc_scheme = Scheme::huffman, dec_scheme = Scheme::huffman;
  std::string code_out, enc_out, dec_out, seq_out, sweep_out, ce_out;
  std::string enc_data, dec_data;
  int seq_n = 2;

  auto* bounds = app.add_subcommand("bounds", "Shannon, UISC, I-W and MIM bounds as JSON");
  bounds_src.attach(bounds);

  auto* code = app.add_subcommand("code", "Build a prefix code and report its weighted length");
  code_src.attach(code);
  code->add_option("--scheme", code_scheme, "ceiling|huffman")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  code->add_option("--out", code_out, "output path (default stdout)");

  auto* enc = app.add_subcommand("encode", "Encode symbol indices to a digit string");
  enc_src.attach(enc);
  enc->add_option("--scheme", enc_scheme, "ceiling|huffman")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  enc->add_option("data", enc_data, "file of comma/newline separated indices ('-' for stdin)")
      ->required();
  enc->add_option("--out", enc_out, "output path (default stdout)");

  auto* dec = app.add_subcommand("decode", "Decode a digit string to symbol indices");
  dec_src.attach(dec);
  dec->add_option("--scheme", dec_scheme, "ceiling|huffman")
      ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case));
  dec->add_option("data", dec_data, "file holding the digit string ('-' for stdin)")->required();
  dec->add_option("--out", dec_out, "output path (default stdout)");

  iwcode::cli::SweepOptions sweep_opts;
  double sweep_omega = 0.0;
  auto* sweep = app.add_subcommand("sweep", "Write figure data as CSV");
  sweep->add_option("--figure", sweep_opts.figure, "fig1|fig2|counterexample")
      ->required()
      ->transform(CLI::CheckedTransformer(figures, CLI::ignore_case));
  auto* sweep_omega_opt = sweep->add_option("--omega", sweep_omega, "importance coefficient");
  sweep->add_option("--grid-step", sweep_opts.grid_step, "p1 grid spacing (default 0.01)");
  sweep->add_option("--base", sweep_opts.base, "code alphabet size D (default 2)");
  sweep->add_option("--out", sweep_out,
                    "CSV path; a directory when --omega is omitted (default stdout)");

  iwcode::cli::SweepOptions ce_opts;
  ce_opts.figure = Figure::counterexample;
  auto* ce = app.add_subcommand("counterexample", "Alias for: sweep --figure counterexample");
  ce->add_option("--grid-step", ce_opts.grid_step, "p1 grid spacing (default 0.01)");
  ce->add_option("--out", ce_out, "CSV path (default stdout)");

  auto* seq = app.add_subcommand("sequence", "Block-coding bounds and product-form verification");
  seq_src.attach(seq);
  seq->add_option("--n", seq_n, "block length")->check(CLI::PositiveNumber);
  seq->add_option("--out", seq_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_status = app.exit(e);
    return code_status == 0 ? 0 : 1;
  }

  try {
    if (*bounds) {
      std::cout << iwcode::cli::cmd_bounds(bounds_src.resolve()).dump(2) << '\n';
    } else if (*code) {
      emit(iwcode::cli::cmd_code(code_src.resolve(), code_scheme).dump(2) + "\n", code_out);
    } else if (*enc) {
      const auto source = enc_src.resolve();
      emit(iwcode::cli::cmd_encode(source, enc_scheme, read_input(enc_data)) + "\n", enc_out);
    } else if (*dec) {
      const auto source = dec_src.resolve();
      const auto symbols = iwcode::cli::cmd_decode(source, dec_scheme, read_input(dec_data));
      std::ostringstream text;
      for (std::size_t i = 0; i < symbols.size(); ++i) text << (i ? "," : "") << symbols[i];
      text << '\n';
      emit(text.str(), dec_out);
    } else if (*sweep) {
      if (sweep_omega_opt->count() > 0) sweep_opts.omega = sweep_omega;
      for (const auto& path : iwcode::cli::cmd_sweep(sweep_opts, sweep_out, std::cout)) {
        std::cerr << "wrote " << path << '\n';
      }
    } else if (*ce) {
      iwcode::cli::cmd_sweep(ce_opts, ce_out, std::cout);
    } else if (*seq) {
      const auto source = seq_src.resolve();
      const auto cap = iwcode::cli::sequence_cap_from_env();
      emit(iwcode::cli::cmd_sequence(source, seq_n, cap, std::cerr).dump(2) + "\n", seq_out);
    }
  } catch (const iwcode::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
