// Copyright 2026 The jrecast Authors
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

#include <stdexcept>
#include <string>

namespace jrecast {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input that cannot be tokenized or bracket-balanced.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  explicit EncodingError(const std::string& msg) : Error(msg) {}
};

class OverlappingEdits : public Error {
 public:
  explicit OverlappingEdits(const std::string& msg) : Error(msg) {}
};

class FunctionNotFound : public Error {
 public:
  explicit FunctionNotFound(const std::string& msg) : Error(msg) {}
};

class AmbiguousFunction : public Error {
 public:
  explicit AmbiguousFunction(const std::string& msg) : Error(msg) {}
};

/// A pipeline stage produced text that no longer parses. This is a bug in
/// the transformation itself and is surfaced loudly instead of skipped.
class StageParseFailure : public Error {
 public:
  StageParseFailure(const std::string& stage, const std::string& msg)
      : Error("stage " + stage + ": " + msg), stage(stage) {}
  std::string stage;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace jrecast
