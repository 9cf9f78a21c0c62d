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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/tree.hpp"

namespace jrecast::transform {

using syntax::Edit;
using syntax::EditScript;
using syntax::Span;

/// Builds replacements for spans that may nest (a loop inside a loop, a
/// switch inside a switch). Candidates are processed innermost-first; when an
/// outer replacement is assembled from slices of the original text, any inner
/// replacement registered within a slice is spliced into it. Only maximal
/// spans survive into the final edit script.
class SpanRewriter {
 public:
  explicit SpanRewriter(const std::string& src) : src_(src) {}

  void add(Span s, std::string text) { repls_[s.begin] = Edit{s, std::move(text)}; }

  std::string slice(Span s) const { return slice_with(s, {}); }

  /// Extract [s.begin, s.end) applying registered replacements plus `extra`
  /// edits (all contained in s; insertions sort before replacements starting
  /// at the same offset).
  std::string slice_with(Span s, EditScript extra) const {
    for (auto it = repls_.lower_bound(s.begin); it != repls_.end(); ++it) {
      if (it->second.span.begin >= s.end) break;
      if (it->second.span.end <= s.end) extra.push_back(it->second);
    }
    std::stable_sort(extra.begin(), extra.end(), [](const Edit& a, const Edit& b) {
      if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
      return a.span.end < b.span.end;
    });
    std::string out;
    uint32_t pos = s.begin;
    for (const Edit& e : extra) {
      if (e.span.begin < pos) continue;  // nested inside an applied edit
      out.append(src_, pos, e.span.begin - pos);
      out.append(e.text);
      pos = e.span.end;
    }
    out.append(src_, pos, s.end - pos);
    return out;
  }

  /// Replacements not contained in any other replacement.
  EditScript top_level_edits() const {
    EditScript out;
    uint32_t covered_to = 0;
    for (const auto& [begin, e] : repls_) {
      if (begin < covered_to) continue;
      out.push_back(e);
      covered_to = e.span.end;
    }
    return out;
  }

  bool empty() const { return repls_.empty(); }

 private:
  const std::string& src_;
  std::map<uint32_t, Edit> repls_;
};

/// Leading whitespace of the line containing `offset`.
inline std::string indent_at(const std::string& text, uint32_t offset) {
  size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
  line_start = line_start == std::string::npos ? 0 : line_start + 1;
  std::string out;
  for (size_t i = line_start; i < text.size(); ++i) {
    if (text[i] == ' ' || text[i] == '\t') out.push_back(text[i]);
    else break;
  }
  return out;
}

/// Sorts candidate nodes innermost-first (strictly nested spans are smaller).
inline void sort_innermost_first(const syntax::SyntaxTree& tree,
                                 std::vector<syntax::NodeId>& nodes) {
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](syntax::NodeId a, syntax::NodeId b) {
                     return tree.span(a).size() < tree.span(b).size();
                   });
}

}  // namespace jrecast::transform
