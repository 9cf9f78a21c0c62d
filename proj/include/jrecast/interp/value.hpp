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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jrecast/support/error.hpp"

namespace jrecast::interp {

/// Raised for Java constructs the mini-runtime does not model. Distinct from
/// program-level exceptions: callers map this to an infrastructure failure,
/// never to program behavior.
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

/// An in-flight Java exception.
struct JavaThrow {
  std::string type;     // simple name, e.g. "ArithmeticException"
  std::string message;  // empty when absent
};

struct ArrayVal;
struct ExcVal {
  std::string type;
  std::string message;
  bool has_message = false;
};

struct Value {
  enum class Tag : uint8_t { Null, Bool, Char, Int, Long, Str, Array, Exc };
  Tag tag = Tag::Null;
  int64_t num = 0;                        // Bool / Char / Int / Long payload
  std::shared_ptr<std::string> str;       // Str payload; identity via pointer
  std::shared_ptr<ArrayVal> arr;
  std::shared_ptr<ExcVal> exc;

  static Value null() { return {}; }
  static Value boolean(bool b) { return {Tag::Bool, b ? 1 : 0, nullptr, nullptr, nullptr}; }
  static Value ch(uint16_t c) { return {Tag::Char, c, nullptr, nullptr, nullptr}; }
  static Value i32(int64_t v) {
    return {Tag::Int, static_cast<int32_t>(static_cast<uint32_t>(v)), nullptr,
            nullptr, nullptr};
  }
  static Value i64(int64_t v) { return {Tag::Long, v, nullptr, nullptr, nullptr}; }
  static Value string(std::string s) {
    Value v;
    v.tag = Tag::Str;
    v.str = std::make_shared<std::string>(std::move(s));
    return v;
  }

  bool is_numeric() const {
    return tag == Tag::Char || tag == Tag::Int || tag == Tag::Long;
  }
  bool as_bool() const {
    if (tag != Tag::Bool) throw Unsupported("boolean expected");
    return num != 0;
  }
};

struct ArrayVal {
  std::string elem_type;          // declared element type, e.g. "int", "String"
  std::vector<Value> elems;
};

// Two's-complement wrapping helpers: Java int/long arithmetic wraps.
inline int64_t wrap32(int64_t v) {
  return static_cast<int32_t>(static_cast<uint32_t>(static_cast<uint64_t>(v)));
}
inline int64_t wrap64(uint64_t v) { return static_cast<int64_t>(v); }

inline Value default_for(const std::string& type) {
  if (type == "int" || type == "short" || type == "byte") return Value::i32(0);
  if (type == "long") return Value::i64(0);
  if (type == "char") return Value::ch(0);
  if (type == "boolean") return Value::boolean(false);
  return Value::null();
}

/// Java's string conversion for the + operator and println.
inline std::string java_to_string(const Value& v) {
  switch (v.tag) {
    case Value::Tag::Null: return "null";
    case Value::Tag::Bool: return v.num ? "true" : "false";
    case Value::Tag::Int: return std::to_string(static_cast<int32_t>(v.num));
    case Value::Tag::Long: return std::to_string(v.num);
    case Value::Tag::Char: {
      // ASCII chars encode directly; others as UTF-8
      uint16_t c = static_cast<uint16_t>(v.num);
      std::string out;
      if (c < 0x80) {
        out.push_back(static_cast<char>(c));
      } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
      }
      return out;
    }
    case Value::Tag::Str: return *v.str;
    case Value::Tag::Exc:
      return v.exc->type + (v.exc->has_message ? ": " + v.exc->message : "");
    case Value::Tag::Array:
      throw Unsupported("string conversion of array values");
  }
  return "";
}

}  // namespace jrecast::interp
