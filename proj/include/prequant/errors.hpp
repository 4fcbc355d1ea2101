// Copyright 2026 The prequant developers
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

#include <stdexcept>
#include <string>

namespace prequant {

/// A measured ensemble may never be read again; every statistical
/// operation on it raises this.
class EnsembleConsumedError : public std::logic_error {
  public:
    EnsembleConsumedError()
        : std::logic_error(
              "field ensemble has been measured and is consumed; "
              "prepare a new ensemble to measure again") {}
};

/// Parse failure in one of the textual input formats. Carries the
/// source name and 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, long line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          source_(source),
          line_(line) {}

    const std::string& source() const { return source_; }
    long line() const { return line_; }

  private:
    std::string source_;
    long line_;
};

/// Invalid or unreadable experiment configuration.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prequant
