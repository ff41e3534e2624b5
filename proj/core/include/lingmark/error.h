// Copyright 2026 The Lingmark Authors.
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

#ifndef LINGMARK_ERROR_H_
#define LINGMARK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lingmark {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or configuration (k < 2, gamma outside (0,1), ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed corpus input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Schema or invariant violation while loading a saved artifact.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingmark

#endif  // LINGMARK_ERROR_H_
