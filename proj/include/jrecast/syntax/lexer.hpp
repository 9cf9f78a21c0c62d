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

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "jrecast/syntax/source.hpp"

namespace jrecast::syntax {

enum class TokKind : uint8_t {
  End,
  Ident,
  Keyword,
  IntLit,      // also covers hex/binary/octal
  LongLit,
  FloatLit,    // float or double, including hex floats
  CharLit,
  StringLit,
  TextBlock,
  Punct,       // operators and separators
};

struct Token {
  TokKind kind = TokKind::End;
  Span span;             // bytes in the owning SourceUnit
  int line = 1;          // 1-based position of the first byte
  int column = 1;
};

inline const std::unordered_set<std::string_view>& java_keywords() {
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert", "boolean", "break", "byte", "case", "catch",
      "char", "class", "const", "continue", "default", "do", "double",
      "else", "enum", "extends", "final", "finally", "float", "for", "goto",
      "if", "implements", "import", "instanceof", "int", "interface", "long",
      "native", "new", "package", "private", "protected", "public", "return",
      "short", "static", "strictfp", "super", "switch", "synchronized",
      "this", "throw", "throws", "transient", "try", "void", "volatile",
      "while", "true", "false", "null", "_"};
  return kw;
}

/// Tokenizes Java source. Whitespace and comments are not emitted; because
/// token spans index into the original text, the gaps between consecutive
/// token spans are exactly the preserved trivia.
class Lexer {
 public:
  explicit Lexer(const SourceUnit& unit) : unit_(unit), text_(unit.text()) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t;
      t.line = unit_.line_of(static_cast<uint32_t>(pos_));
      t.column = unit_.column_of(static_cast<uint32_t>(pos_));
      t.span.begin = static_cast<uint32_t>(pos_);
      if (pos_ >= text_.size()) {
        t.kind = TokKind::End;
        t.span.end = t.span.begin;
        out.push_back(t);
        return out;
      }
      scan(t);
      t.span.end = static_cast<uint32_t>(pos_);
      out.push_back(t);
    }
  }

 private:
  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char at(size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  [[noreturn]] void fail(const std::string& msg, size_t offset) const {
    throw SyntaxError(unit_.path() + ": " + msg,
                      unit_.line_of(static_cast<uint32_t>(offset)),
                      unit_.column_of(static_cast<uint32_t>(offset)));
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        pos_++;
      } else if (c == '/' && at(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') pos_++;
      } else if (c == '/' && at(1) == '*') {
        size_t start = pos_;
        pos_ += 2;
        while (pos_ + 1 < text_.size() &&
               !(text_[pos_] == '*' && text_[pos_ + 1] == '/'))
          pos_++;
        if (pos_ + 1 >= text_.size()) fail("unterminated block comment", start);
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '$' || static_cast<unsigned char>(c) >= 0x80;
  }
  static bool ident_part(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
  static bool digit(char c) { return c >= '0' && c <= '9'; }
  static bool hex_digit(char c) {
    return digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
  }

  void scan(Token& t) {
    char c = cur();
    if (ident_start(c)) {
      size_t start = pos_;
      while (ident_part(cur())) pos_++;
      std::string_view word = std::string_view(text_).substr(start, pos_ - start);
      t.kind = java_keywords().count(word) ? TokKind::Keyword : TokKind::Ident;
      return;
    }
    if (digit(c) || (c == '.' && digit(at(1)))) {
      scan_number(t);
      return;
    }
    if (c == '\'') { scan_char(t); return; }
    if (c == '"') {
      if (at(1) == '"' && at(2) == '"') scan_text_block(t);
      else scan_string(t);
      return;
    }
    scan_punct(t);
  }

  void scan_number(Token& t) {
    bool is_float = false;
    bool hex = false;
    if (cur() == '0' && (at(1) == 'x' || at(1) == 'X')) {
      hex = true;
      pos_ += 2;
      while (hex_digit(cur()) || cur() == '_') pos_++;
      if (cur() == '.' || cur() == 'p' || cur() == 'P') {
        is_float = true;  // hex float
        if (cur() == '.') { pos_++; while (hex_digit(cur()) || cur() == '_') pos_++; }
        if (cur() == 'p' || cur() == 'P') {
          pos_++;
          if (cur() == '+' || cur() == '-') pos_++;
          while (digit(cur()) || cur() == '_') pos_++;
        }
      }
    } else if (cur() == '0' && (at(1) == 'b' || at(1) == 'B')) {
      pos_ += 2;
      while (cur() == '0' || cur() == '1' || cur() == '_') pos_++;
    } else {
      while (digit(cur()) || cur() == '_') pos_++;
      if (cur() == '.' && (digit(at(1)) || !ident_start(at(1)))) {
        // "1." and "1.5" are floats; "1.foo" never occurs (int has no members)
        if (digit(at(1)) || at(1) == 'e' || at(1) == 'E' || at(1) == 'f' ||
            at(1) == 'F' || at(1) == 'd' || at(1) == 'D' || !ident_part(at(1))) {
          is_float = true;
          pos_++;
          while (digit(cur()) || cur() == '_') pos_++;
        }
      }
      if (cur() == 'e' || cur() == 'E') {
        is_float = true;
        pos_++;
        if (cur() == '+' || cur() == '-') pos_++;
        while (digit(cur()) || cur() == '_') pos_++;
      }
    }
    if (cur() == 'l' || cur() == 'L') {
      pos_++;
      t.kind = TokKind::LongLit;
      return;
    }
    if (!hex && (cur() == 'f' || cur() == 'F' || cur() == 'd' || cur() == 'D')) {
      pos_++;
      is_float = true;
    }
    t.kind = is_float ? TokKind::FloatLit : TokKind::IntLit;
  }

  void consume_escape(size_t start) {
    // caller consumed the backslash
    if (pos_ >= text_.size()) fail("unterminated escape", start);
    char e = text_[pos_++];
    if (e == 'u') {
      while (cur() == 'u') pos_++;
      for (int i = 0; i < 4; ++i) {
        if (!hex_digit(cur())) fail("bad unicode escape", start);
        pos_++;
      }
    }
    // octal and single-char escapes need no further validation for spans
  }

  void scan_char(Token& t) {
    size_t start = pos_;
    pos_++;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '\'') {
      if (text_[pos_] == '\n') fail("unterminated character literal", start);
      if (text_[pos_] == '\\') { pos_++; consume_escape(start); }
      else pos_++;
    }
    if (pos_ >= text_.size()) fail("unterminated character literal", start);
    pos_++;  // closing quote
    t.kind = TokKind::CharLit;
  }

  void scan_string(Token& t) {
    size_t start = pos_;
    pos_++;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') fail("unterminated string literal", start);
      if (text_[pos_] == '\\') { pos_++; consume_escape(start); }
      else pos_++;
    }
    if (pos_ >= text_.size()) fail("unterminated string literal", start);
    pos_++;
    t.kind = TokKind::StringLit;
  }

  void scan_text_block(Token& t) {
    size_t start = pos_;
    pos_ += 3;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '\\') { pos_ += 2; continue; }
      if (text_[pos_] == '"' && pos_ + 2 < text_.size() &&
          text_[pos_ + 1] == '"' && text_[pos_ + 2] == '"') {
        pos_ += 3;
        t.kind = TokKind::TextBlock;
        return;
      }
      pos_++;
    }
    fail("unterminated text block", start);
  }

  void scan_punct(Token& t) {
    t.kind = TokKind::Punct;
    char c = cur();
    // '>' is always emitted alone (or as ">=") so nested generics close
    // cleanly; the parser reassembles adjacent '>' tokens into shifts.
    if (c == '>') {
      pos_++;
      if (cur() == '=') pos_++;
      return;
    }
    static constexpr std::array<std::string_view, 20> multi = {
        "<<=", "...", "->", "::", "==", "!=", "<=", "&&", "||", "++",
        "--",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<"};
    std::string_view rest = std::string_view(text_).substr(pos_);
    for (std::string_view m : multi) {
      if (rest.substr(0, m.size()) == m) {
        pos_ += m.size();
        return;
      }
    }
    switch (c) {
      case '(': case ')': case '{': case '}': case '[': case ']':
      case ';': case ',': case '.': case '@': case ':': case '?':
      case '~': case '!': case '=': case '<': case '+': case '-':
      case '*': case '/': case '%': case '&': case '|': case '^':
        pos_++;
        return;
      default:
        fail(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  const SourceUnit& unit_;
  const std::string& text_;
  size_t pos_ = 0;
};

inline std::vector<Token> tokenize(const SourceUnit& unit) {
  return Lexer(unit).run();
}

}  // namespace jrecast::syntax
