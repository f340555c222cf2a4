// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmss {

// Exponential enumerations (all maximum matchings, mu_r, Omega, Psi and exact
// search on non-bipartite inputs) refuse graphs with more vertices than this.
inline constexpr std::size_t kExactSearchCap = 20;

/// Malformed input: unknown vertex, non-edge, overlapping sets, bad file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list parse failure; carries the 1-based line number (0 if the
/// problem is not tied to a line, e.g. an empty file).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// The input is outside the class of graphs an operation is defined for
/// (e.g. matching extension on a non-bipartite graph).
class UnsupportedInput : public InputError {
 public:
  using InputError::InputError;
};

/// An exponential search was asked to run on a graph above kExactSearchCap.
class SizeCapError : public std::runtime_error {
 public:
  SizeCapError(const std::string& op, std::size_t order)
      : std::runtime_error(op + ": graph has " + std::to_string(order) +
                           " vertices, exact search is capped at " +
                           std::to_string(kExactSearchCap)) {}
};

/// Internal consistency check failed; indicates a bug or a counterexample to
/// a proven statement.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_cap(const char* op, std::size_t order) {
  if (order > kExactSearchCap) throw SizeCapError(op, order);
}

}  // namespace lmss
