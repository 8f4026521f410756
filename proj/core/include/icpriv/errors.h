// Copyright 2026 The icpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICPRIV_ERRORS_H_
#define ICPRIV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace icpriv {

// A caller supplied an argument outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text could not be read or parsed. `line()` is 0 when the failure is
// not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A conditional distribution was requested for an event that never occurred
// in the sampled trials (e.g. x_v = 0 when q = 1 on a connected graph).
class DegenerateConditioningError : public std::runtime_error {
 public:
  DegenerateConditioningError(const std::string& what, std::string branch)
      : std::runtime_error(what), branch_(std::move(branch)) {}

  const std::string& branch() const { return branch_; }

 private:
  std::string branch_;
};

}  // namespace icpriv

#endif  // ICPRIV_ERRORS_H_
