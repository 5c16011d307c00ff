// Copyright 2026 the netimb authors
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

#ifndef NETIMB_ERRORS_HPP_
#define NETIMB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netimb {

// Error taxonomy used across the library:
//   - std::invalid_argument  for violated parameter preconditions,
//   - parse_error            for malformed input text (carries a line number),
//   - metric_error           for mathematically undefined requests on valid
//                            inputs (disconnected graph where connectivity is
//                            required, gradients at zero total weight, no
//                            candidate edges, solver capacity),
//   - io_error               for filesystem failures.

/// Malformed input text; `line()` is the 1-based offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A metric or derived quantity is undefined for the given input.
class metric_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Filesystem read/write failure.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netimb

#endif  // NETIMB_ERRORS_HPP_
