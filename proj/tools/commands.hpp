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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iwcode/io.hpp"

namespace iwcode::cli {

using json = nlohmann::json;

enum class Scheme { ceiling, huffman };
enum class Figure { fig1, fig2, counterexample };

/// Where the source comes from: a JSON file, inline flags, or a file with
/// flag overrides.
struct SourceOptions {
  std::optional<std::string> source_path;
  std::optional<std::vector<double>> probs;
  std::optional<std::vector<double>> weights;
  std::optional<double> omega;
  std::optional<int> base;
};

io::SourceFile resolve_source(const SourceOptions& opts);

/// Product-space cap, honouring IWCODE_SEQ_CAP when set.
std::size_t sequence_cap_from_env();

/// Symbol indices separated by commas and/or whitespace.
std::vector<std::size_t> parse_symbols(const std::string& text);

CodeSpec build_code(const io::SourceFile& source, Scheme scheme);

json cmd_bounds(const io::SourceFile& source);
json cmd_code(const io::SourceFile& source, Scheme scheme);
std::string cmd_encode(const io::SourceFile& source, Scheme scheme, const std::string& data);
std::vector<std::size_t> cmd_decode(const io::SourceFile& source, Scheme scheme,
                                    const std::string& digits);
json cmd_sequence(const io::SourceFile& source, int n, std::size_t cap, std::ostream& warnings);

struct SweepOptions {
  Figure figure = Figure::fig2;
  std::optional<double> omega;
  double grid_step = kDefaultGridStep;
  int base = 2;
};

/// Writes one figure's CSV for a single omega (ignored for the
/// counterexample).
void write_sweep(const SweepOptions& opts, std::ostream& out);

/// Runs a sweep to `out_path` (or `stdout` when empty). Without --omega the
/// figure's default omega set is written, one file per omega, into the
/// directory `out_path`. Returns the paths written.
std::vector<std::string> cmd_sweep(const SweepOptions& opts, const std::string& out_path,
                                   std::ostream& stdout_stream);

std::vector<double> default_omegas(Figure figure);

}  // namespace iwcode::cli
