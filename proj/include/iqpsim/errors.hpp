// Copyright 2026 The iqpsim authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iqpsim {

/// Error in a text input (circuit, distribution, pattern or manifest file).
/// Carries the source name and 1-based line number.
class parse_error : public std::runtime_error {
   public:
    parse_error(std::string source, std::size_t line, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)),
          line_(line) {}

    const std::string &source() const noexcept {
        return source_;
    }
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::string source_;
    std::size_t line_;
};

/// A requested problem size exceeds a hard engine/oracle limit.
class size_limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Post-selection on an event of zero probability.
class zero_probability_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace iqpsim
