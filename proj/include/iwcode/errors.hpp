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
#include <stdexcept>
#include <string>

namespace iwcode {

/// Base for every error caused by bad caller input (CLI exit status 1).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InputError {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual)
      : InputError(what + ": expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(actual)) {}
};

class KraftViolation : public InputError {
 public:
  using InputError::InputError;
};

/// Product space larger than the configured enumeration cap.
class CapExceeded : public InputError {
 public:
  CapExceeded(std::size_t needed, std::size_t cap)
      : InputError("product space of " + std::to_string(needed) +
                   " entries exceeds cap of " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t needed_;
  std::size_t cap_;
};

class DecodeError : public InputError {
 public:
  enum class Kind { invalid_digit, unassigned_prefix, truncated };

  DecodeError(Kind kind, std::size_t offset)
      : InputError(describe(kind) + " at digit offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  /// Offset of the offending digit (invalid_digit) or of the start of the
  /// codeword that could not be completed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  static std::string describe(Kind kind) {
    switch (kind) {
      case Kind::invalid_digit: return "digit outside the code alphabet";
      case Kind::unassigned_prefix: return "digits match no codeword";
      case Kind::truncated: return "incomplete codeword";
    }
    return "decode error";
  }

  Kind kind_;
  std::size_t offset_;
};

/// A postcondition the library guarantees failed to hold (CLI exit status 2).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iwcode
