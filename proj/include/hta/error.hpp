// Copyright 2026 The hta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTA_ERROR_HPP
#define HTA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hta {

// Parse errors map to exit code 2 in the CLI, everything else to 3.
enum class ErrorKind { Parse, Invariant };

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        ErrorKind kind = ErrorKind::Invariant)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        detail_(message),
        kind_(kind) {}

  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }
  ErrorKind kind() const { return kind_; }

 private:
  std::string code_;
  std::string detail_;
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(std::move(code),
              message + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")",
              ErrorKind::Parse),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hta

#endif  // HTA_ERROR_HPP
