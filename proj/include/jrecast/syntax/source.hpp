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
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jrecast/support/error.hpp"

namespace jrecast::syntax {

/// Half-open byte range [begin, end) into a SourceUnit's text.
struct Span {
  uint32_t begin = 0;
  uint32_t end = 0;

  uint32_t size() const { return end - begin; }
  bool contains(uint32_t offset) const { return begin <= offset && offset < end; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class EolStyle { Lf, CrLf, Mixed };

/// One source file held in memory. Line table and line-ending style are
/// computed once; the text is immutable afterwards.
class SourceUnit {
 public:
  SourceUnit() = default;

  static SourceUnit from_string(std::string path, std::string text) {
    SourceUnit u;
    u.path_ = std::move(path);
    u.text_ = std::move(text);
    u.validate_utf8();
    u.index();
    return u;
  }

  static SourceUnit from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(path, buf.str());
  }

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }
  EolStyle eol_style() const { return eol_; }

  std::string_view slice(Span s) const {
    return std::string_view(text_).substr(s.begin, s.end - s.begin);
  }

  /// Line ending to use for text inserted into this file. Mixed files get
  /// the dominant style; ties go to LF.
  std::string eol_string() const { return crlf_ > lf_ ? "\r\n" : "\n"; }

  size_t line_count() const { return line_starts_.size(); }

  /// 1-based line number containing the byte offset.
  int line_of(uint32_t offset) const {
    size_t lo = 0, hi = line_starts_.size();
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (line_starts_[mid] <= offset) lo = mid; else hi = mid;
    }
    return static_cast<int>(lo) + 1;
  }

  /// 1-based column (byte-oriented) of the offset within its line.
  int column_of(uint32_t offset) const {
    return static_cast<int>(offset - line_starts_[line_of(offset) - 1]) + 1;
  }

  /// Byte offset of the start of a 1-based line.
  uint32_t offset_of_line(int line) const {
    if (line < 1 || static_cast<size_t>(line) > line_starts_.size())
      throw Error("line " + std::to_string(line) + " out of range in " + path_);
    return line_starts_[line - 1];
  }

  /// The text of a 1-based line, without its terminator.
  std::string_view line_text(int line) const {
    uint32_t begin = offset_of_line(line);
    uint32_t end = static_cast<size_t>(line) < line_starts_.size()
                       ? line_starts_[line]
                       : static_cast<uint32_t>(text_.size());
    std::string_view sv = std::string_view(text_).substr(begin, end - begin);
    while (!sv.empty() && (sv.back() == '\n' || sv.back() == '\r')) sv.remove_suffix(1);
    return sv;
  }

 private:
  void validate_utf8() const {
    const auto* p = reinterpret_cast<const unsigned char*>(text_.data());
    size_t n = text_.size();
    for (size_t i = 0; i < n;) {
      unsigned char c = p[i];
      size_t need;
      if (c < 0x80) { i++; continue; }
      else if ((c & 0xE0) == 0xC0) need = 1;
      else if ((c & 0xF0) == 0xE0) need = 2;
      else if ((c & 0xF8) == 0xF0) need = 3;
      else throw EncodingError(path_ + ": invalid UTF-8 byte at offset " + std::to_string(i));
      if (i + need >= n)
        throw EncodingError(path_ + ": truncated UTF-8 sequence at offset " + std::to_string(i));
      for (size_t k = 1; k <= need; ++k) {
        if ((p[i + k] & 0xC0) != 0x80)
          throw EncodingError(path_ + ": invalid UTF-8 continuation at offset " +
                              std::to_string(i + k));
      }
      i += need + 1;
    }
  }

  void index() {
    line_starts_.clear();
    line_starts_.push_back(0);
    lf_ = crlf_ = 0;
    for (size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        if (i > 0 && text_[i - 1] == '\r') crlf_++; else lf_++;
        if (i + 1 < text_.size()) line_starts_.push_back(static_cast<uint32_t>(i + 1));
      }
    }
    if (crlf_ > 0 && lf_ > 0) eol_ = EolStyle::Mixed;
    else if (crlf_ > 0) eol_ = EolStyle::CrLf;
    else eol_ = EolStyle::Lf;
  }

  std::string path_;
  std::string text_;
  std::vector<uint32_t> line_starts_;
  EolStyle eol_ = EolStyle::Lf;
  int lf_ = 0;
  int crlf_ = 0;
};

}  // namespace jrecast::syntax
