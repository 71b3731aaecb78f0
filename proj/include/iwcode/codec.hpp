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

// Prefix codes: ideal and ceiling length assignment, Kraft checks, canonical
// codeword assignment, weighted Huffman and encode/decode over D-ary digit
// strings.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iwcode/detail/numeric.hpp"
#include "iwcode/errors.hpp"
#include "iwcode/measures.hpp"
#include "iwcode/source_model.hpp"

namespace iwcode {

/// Codewords are written with one character per digit, most significant
/// first, using this alphabet; bases above 36 cannot be rendered.
inline constexpr std::string_view kDigitAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
inline constexpr int kMaxCodecBase = static_cast<int>(kDigitAlphabet.size());

namespace detail {

inline int digit_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

inline void require_codec_base(CodeBase base) {
  if (base.radix() > kMaxCodecBase) {
    throw InputError("codec supports bases up to " + std::to_string(kMaxCodecBase));
  }
}

inline void require_positive_lengths(std::span<const int> lengths) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw InputError("lengths[" + std::to_string(i) + "] must be >= 1");
  }
}

// Digit trie over a set of codewords. Node 0 is the root.
class CodeTrie {
 public:
  static constexpr std::int32_t kNone = -1;

  CodeTrie(std::span<const std::string> codewords, int base) : base_(base) {
    add_node();
    for (std::size_t sym = 0; sym < codewords.size(); ++sym) {
      std::size_t node = 0;
      const auto& word = codewords[sym];
      if (word.empty()) throw InputError("codeword " + std::to_string(sym) + " is empty");
      for (char c : word) {
        const int d = digit_value(c);
        if (d < 0 || d >= base_) {
          throw InputError("codeword " + std::to_string(sym) + " has a digit outside base " +
                           std::to_string(base_));
        }
        if (symbol_[node] != kNone) {
          throw InputError("code is not prefix-free: codeword " +
                           std::to_string(symbol_[node]) + " prefixes codeword " +
                           std::to_string(sym));
        }
        const std::size_t slot = node * base_ + d;
        if (children_[slot] == kNone) {
          const auto fresh = static_cast<std::int32_t>(add_node());
          children_[slot] = fresh;
        }
        node = static_cast<std::size_t>(children_[slot]);
      }
      if (symbol_[node] != kNone || has_children(node)) {
        throw InputError("code is not prefix-free at codeword " + std::to_string(sym));
      }
      symbol_[node] = static_cast<std::int32_t>(sym);
    }
  }

  std::vector<std::size_t> decode(std::string_view digits) const {
    std::vector<std::size_t> out;
    std::size_t node = 0;
    std::size_t word_start = 0;
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
      const int d = digit_value(digits[pos]);
      if (d < 0 || d >= base_) throw DecodeError(DecodeError::Kind::invalid_digit, pos);
      const auto child = children_[node * base_ + d];
      if (child == kNone) throw DecodeError(DecodeError::Kind::unassigned_prefix, word_start);
      node = static_cast<std::size_t>(child);
      if (symbol_[node] != kNone) {
        out.push_back(static_cast<std::size_t>(symbol_[node]));
        node = 0;
        word_start = pos + 1;
      }
    }
    if (node != 0) throw DecodeError(DecodeError::Kind::truncated, word_start);
    return out;
  }

 private:
  std::size_t add_node() {
    children_.resize(children_.size() + static_cast<std::size_t>(base_), kNone);
    symbol_.push_back(kNone);
    return symbol_.size() - 1;
  }

  bool has_children(std::size_t node) const {
    for (int d = 0; d < base_; ++d) {
      if (children_[node * base_ + d] != kNone) return true;
    }
    return false;
  }

  int base_;
  std::vector<std::int32_t> children_;
  std::vector<std::int32_t> symbol_;
};

}  // namespace detail

/// A prefix-free D-ary code. Construction validates every invariant, so a
/// CodeSpec in hand is always decodable.
class CodeSpec {
 public:
  CodeSpec(std::vector<int> lengths, std::vector<std::string> codewords, CodeBase base)
      : lengths_(std::move(lengths)), codewords_(std::move(codewords)), base_(base) {
    detail::require_codec_base(base_);
    if (lengths_.size() != codewords_.size()) {
      throw DimensionMismatch("codewords", lengths_.size(), codewords_.size());
    }
    if (lengths_.empty()) throw InputError("code has no symbols");
    detail::require_positive_lengths(lengths_);
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (codewords_[i].size() != static_cast<std::size_t>(lengths_[i])) {
        throw InputError("codeword " + std::to_string(i) + " does not have length " +
                         std::to_string(lengths_[i]));
      }
    }
    // Prefix-freeness (and hence Kraft) is checked while building the trie.
    detail::CodeTrie(codewords_, base_.radix());
  }

  std::size_t size() const noexcept { return lengths_.size(); }
  CodeBase base() const noexcept { return base_; }
  std::span<const int> lengths() const noexcept { return lengths_; }
  std::span<const std::string> codewords() const noexcept { return codewords_; }
  const std::string& codeword(std::size_t symbol) const { return codewords_.at(symbol); }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

 private:
  std::vector<int> lengths_;
  std::vector<std::string> codewords_;
  CodeBase base_;
};

/// Real-valued minimizers of the weighted cost: -log_D(p_i w_i / H_w).
/// These satisfy Kraft with equality and reproduce iw_measure exactly.
inline std::vector<double> ideal_lengths(const Distribution& dist, const WeightVector& w,
                                         CodeBase base) {
  const double hw = weighted_avg_hw(dist, w);
  std::vector<double> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out[i] = -detail::log_base(dist[i] * w[i] / hw, base.radix());
  }
  return out;
}

/// sum_i D^{-l_i}, evaluated by Horner's rule from the longest length so the
/// common complete codes come out exact.
inline double kraft_sum(std::span<const int> lengths, CodeBase base) {
  detail::require_positive_lengths(lengths);
  if (lengths.empty()) return 0.0;
  const int longest = *std::max_element(lengths.begin(), lengths.end());
  std::vector<std::size_t> count(static_cast<std::size_t>(longest) + 1, 0);
  for (int l : lengths) ++count[static_cast<std::size_t>(l)];
  double s = 0.0;
  for (int l = longest; l >= 1; --l) {
    s = (s + static_cast<double>(count[static_cast<std::size_t>(l)])) / base.radix();
  }
  return s;
}

/// Ceilings of the ideal lengths, clamped to at least one digit. Ideal
/// lengths within 1e-11 of an integer are taken as that integer so the
/// result does not depend on rounding noise (e.g. under weight rescaling).
inline std::vector<int> integer_lengths(const Distribution& dist, const WeightVector& w,
                                        CodeBase base) {
  const auto ideal = ideal_lengths(dist, w, base);
  std::vector<int> out(ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    out[i] = static_cast<int>(std::max(1LL, detail::snapped_ceil(ideal[i])));
  }
  if (kraft_sum(out, base) > 1.0) {
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      out[i] = static_cast<int>(std::max(1.0, std::ceil(ideal[i])));
    }
  }
  return out;
}

/// True when some ideal length was <= 0 and integer_lengths had to clamp.
inline bool lengths_clamped(const Distribution& dist, const WeightVector& w, CodeBase base) {
  const auto ideal = ideal_lengths(dist, w, base);
  return std::any_of(ideal.begin(), ideal.end(),
                     [](double l) { return detail::snapped_ceil(l) < 1; });
}

struct GeneralizedKraft {
  double lhs = 0.0;  // sum u_i D^{-l_i}
  double rhs = 0.0;  // sum u_i p_i
  bool holds = false;
};

/// Evaluates the utility-weighted Kraft condition sum u_i D^{-l_i} <= sum u_i p_i.
/// This is not a validity test for prefix codes: valid codes can fail it.
inline GeneralizedKraft generalized_kraft_check(std::span<const int> lengths,
                                                const WeightVector& u, const Distribution& dist,
                                                CodeBase base) {
  require_same_size(dist, lengths.size(), "lengths");
  require_same_size(dist, u.size(), "utilities");
  detail::require_positive_lengths(lengths);
  GeneralizedKraft r;
  r.lhs = detail::sum_over(lengths.size(), [&](std::size_t i) {
    return u[i] * std::pow(static_cast<double>(base.radix()), -lengths[i]);
  });
  r.rhs = detail::weighted_avg(dist.probs(), u.values());
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// Canonical assignment: symbols ordered by (length, index) receive
/// numerically increasing codewords. Throws KraftViolation when the lengths
/// admit no prefix code.
inline CodeSpec canonical_code(std::span<const int> lengths, CodeBase base) {
  detail::require_codec_base(base);
  detail::require_positive_lengths(lengths);
  if (lengths.empty()) throw InputError("code has no symbols");

  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

  const int radix = base.radix();
  std::vector<std::string> codewords(lengths.size());
  std::vector<int> digits;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      // Increment in base D; a carry out of the top digit means the code
      // space is exhausted.
      std::size_t pos = digits.size();
      while (pos > 0) {
        --pos;
        if (++digits[pos] < radix) break;
        digits[pos] = 0;
        if (pos == 0) throw KraftViolation("codeword lengths violate the Kraft inequality");
      }
    }
    digits.resize(static_cast<std::size_t>(lengths[order[k]]), 0);
    auto& word = codewords[order[k]];
    word.reserve(digits.size());
    for (int d : digits) word.push_back(kDigitAlphabet[static_cast<std::size_t>(d)]);
  }
  return CodeSpec({lengths.begin(), lengths.end()}, std::move(codewords), base);
}

/// Number of zero-weight symbols D-ary Huffman needs so every merge takes D.
inline std::size_t huffman_padding(std::size_t n, int radix) {
  const std::size_t d1 = static_cast<std::size_t>(radix) - 1;
  const std::size_t merges = (n - 1 + d1 - 1) / d1;
  return merges * d1 + 1 - n;
}

/// Huffman lengths for the combined weights q_i = p_i w_i; exact minimizer of
/// sum p_i w_i l_i over Kraft-feasible integer lengths. Ties go to the lowest
/// symbol index, padding symbols last.
inline std::vector<int> huffman_lengths(std::span<const double> q, CodeBase base) {
  const std::size_t n = q.size();
  if (n < 2) throw InputError("huffman needs at least 2 symbols");
  const std::size_t padded = n + huffman_padding(n, base.radix());

  struct Node {
    double weight;
    std::size_t min_leaf;
    std::size_t parent;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  nodes.reserve(2 * padded);
  for (std::size_t i = 0; i < padded; ++i) nodes.push_back({i < n ? q[i] : 0.0, i, kRoot});

  auto heavier = [&](std::size_t a, std::size_t b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
    return nodes[a].min_leaf > nodes[b].min_leaf;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(heavier)> heap(heavier);
  for (std::size_t i = 0; i < padded; ++i) heap.push(i);

  while (heap.size() > 1) {
    Node merged{0.0, kRoot, kRoot};
    const std::size_t id = nodes.size();
    for (int k = 0; k < base.radix(); ++k) {
      const std::size_t child = heap.top();
      heap.pop();
      merged.weight += nodes[child].weight;
      merged.min_leaf = std::min(merged.min_leaf, nodes[child].min_leaf);
      nodes[child].parent = id;
    }
    nodes.push_back(merged);
    heap.push(id);
  }

  std::vector<int> depth(nodes.size(), 0);
  for (std::size_t i = nodes.size() - 1; i-- > 0;) depth[i] = depth[nodes[i].parent] + 1;
  return {depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n)};
}

inline CodeSpec huffman_weighted(const Distribution& dist, const WeightVector& w, CodeBase base) {
  require_same_size(dist, w.size(), "weights");
  std::vector<double> q(dist.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = dist[i] * w[i];
  return canonical_code(huffman_lengths(q, base), base);
}

inline std::string encode(const CodeSpec& code, std::span<const std::size_t> symbols) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k] >= code.size()) {
      throw InputError("symbol " + std::to_string(symbols[k]) + " at position " +
                       std::to_string(k) + " is outside the alphabet of " +
                       std::to_string(code.size()));
    }
    total += code.codeword(symbols[k]).size();
  }
  std::string out;
  out.reserve(total);
  for (std::size_t s : symbols) out += code.codeword(s);
  return out;
}

/// Reusable decoder; holds the digit trie for one code.
class Decoder {
 public:
  explicit Decoder(const CodeSpec& code) : trie_(code.codewords(), code.base().radix()) {}

  std::vector<std::size_t> operator()(std::string_view digits) const {
    return trie_.decode(digits);
  }

 private:
  detail::CodeTrie trie_;
};

inline std::vector<std::size_t> decode(const CodeSpec& code, std::string_view digits) {
  return Decoder(code)(digits);
}

}  // namespace iwcode
