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
#include <optional>
#include <string>
#include <vector>

#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/parser.hpp"

namespace jrecast::eval {

namespace detail {

/// A candidate is acceptable iff it parses as a single method or constructor
/// declaration when wrapped in a class shell.
inline bool parses_as_function(const std::string& text) {
  try {
    syntax::SyntaxTree tree = syntax::parse(syntax::SourceUnit::from_string(
        "shell.java", "class __Shell {\n" + text + "\n}\n"));
    auto fns = syntax::all_functions(tree);
    if (fns.size() != 1) return false;
    // the shell must contain nothing unparseable
    bool opaque = false;
    tree.walk(tree.root(), [&](syntax::NodeId id) {
      if (tree.node(id).opaque) opaque = true;
      return !opaque;
    });
    return !opaque;
  } catch (const Error&) {
    return false;
  }
}

inline std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == '\n' || s[b] == '\r' || s[b] == ' ' || s[b] == '\t'))
    b++;
  while (e > b && (s[e - 1] == '\n' || s[e - 1] == '\r' || s[e - 1] == ' ' ||
                   s[e - 1] == '\t'))
    e--;
  return s.substr(b, e - b);
}

inline std::optional<std::string> first_fenced_block(const std::string& text) {
  size_t open = text.find("```");
  if (open == std::string::npos) return std::nullopt;
  size_t body = text.find('\n', open);
  if (body == std::string::npos) return std::nullopt;
  body++;
  size_t close = text.find("```", body);
  if (close == std::string::npos) return std::nullopt;
  return text.substr(body, close - body);
}

/// Longest brace-balanced region starting at a method-like signature: a line
/// that is not a comment, contains a '(' before any '=' and eventually opens
/// a brace.
inline std::optional<std::string> longest_signature_region(
    const std::string& text) {
  std::optional<std::string> best;
  size_t line_start = 0;
  while (line_start < text.size()) {
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    std::string t = trim(line);
    bool looks_like_signature =
        !t.empty() && t.rfind("//", 0) != 0 && t.rfind("*", 0) != 0 &&
        t.find('(') != std::string::npos &&
        (t.find('=') == std::string::npos || t.find('(') < t.find('=')) &&
        (isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_' || t[0] == '@');
    if (looks_like_signature) {
      size_t brace = text.find('{', line_start);
      if (brace != std::string::npos) {
        int depth = 0;
        size_t end = std::string::npos;
        for (size_t i = brace; i < text.size(); ++i) {
          if (text[i] == '{') depth++;
          if (text[i] == '}') {
            depth--;
            if (depth == 0) {
              end = i;
              break;
            }
          }
        }
        if (end != std::string::npos) {
          std::string candidate = text.substr(line_start, end + 1 - line_start);
          if ((!best || candidate.size() > best->size()) &&
              parses_as_function(candidate))
            best = candidate;
        }
      }
    }
    line_start = line_end + 1;
  }
  return best;
}

}  // namespace detail

/// Pulls the fixed function out of a raw completion: the first code-fenced
/// block when present, otherwise the longest brace-balanced region starting
/// at a method-like signature. The result must parse as a method declaration
/// inside a class shell; anything else is reported as absent (the caller
/// records the sample as unparsed).
inline std::optional<std::string> extract_function(const std::string& completion) {
  if (auto fenced = detail::first_fenced_block(completion)) {
    std::string body = detail::trim(*fenced);
    if (detail::parses_as_function(body)) return body;
    // a fence full of prose falls back to signature scanning inside it
    if (auto inner = detail::longest_signature_region(*fenced)) return inner;
    return std::nullopt;
  }
  return detail::longest_signature_region(completion);
}

/// Digest of the candidate with comments stripped and whitespace collapsed,
/// used to judge duplicated samples only once. FNV-1a over the normal form.
inline std::string normalized_hash(const std::string& fn_text) {
  std::string norm;
  norm.reserve(fn_text.size());
  bool in_line_comment = false, in_block_comment = false, in_string = false,
       in_char = false;
  for (size_t i = 0; i < fn_text.size(); ++i) {
    char c = fn_text[i];
    char next = i + 1 < fn_text.size() ? fn_text[i + 1] : '\0';
    if (in_line_comment) {
      if (c == '\n') in_line_comment = false;
      continue;
    }
    if (in_block_comment) {
      if (c == '*' && next == '/') {
        in_block_comment = false;
        i++;
      }
      continue;
    }
    if (in_string) {
      norm.push_back(c);
      if (c == '\\' && i + 1 < fn_text.size()) {
        norm.push_back(fn_text[++i]);
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (in_char) {
      norm.push_back(c);
      if (c == '\\' && i + 1 < fn_text.size()) {
        norm.push_back(fn_text[++i]);
      } else if (c == '\'') {
        in_char = false;
      }
      continue;
    }
    if (c == '/' && next == '/') {
      in_line_comment = true;
      i++;
      continue;
    }
    if (c == '/' && next == '*') {
      in_block_comment = true;
      i++;
      continue;
    }
    if (c == '"') {
      in_string = true;
      norm.push_back(c);
      continue;
    }
    if (c == '\'') {
      in_char = true;
      norm.push_back(c);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') continue;
    norm.push_back(c);
  }
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : norm) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jrecast::eval
