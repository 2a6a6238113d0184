// Copyright 2026 The offnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OFFNASH_ERRORS_HPP
#define OFFNASH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace offnash {

/// Caller violated a precondition (dimension mismatch, bad probability
/// vector, regime violation, malformed machine, ...).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A document failed to parse at the syntax level.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

/// A document parsed but its content is invalid (payoff "1/0",
/// ragged matrix, unknown fields, ...).
class semantic_error : public std::runtime_error {
 public:
  explicit semantic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Witness construction was asked for a (game, regime) outside the
/// locally-suboptimal set.
class not_in_ls_error : public std::runtime_error {
 public:
  explicit not_in_ls_error(const std::string& what) : std::runtime_error(what) {}
};

/// The certified horizon exceeds the materialization cap; carries the
/// horizon the construction would have needed.
class horizon_cap_error : public std::runtime_error {
 public:
  horizon_cap_error(const std::string& what, long t_min)
      : std::runtime_error(what), t_min(t_min) {}
  long t_min;
};

}  // namespace offnash

#endif  // OFFNASH_ERRORS_HPP
