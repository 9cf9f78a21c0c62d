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
#include <string>
#include <vector>

#include "jrecast/syntax/source.hpp"
#include "jrecast/syntax/tree.hpp"

namespace jrecast::syntax {

/// One replacement: bytes [span.begin, span.end) become `text`.
/// Pure insertions use an empty span (begin == end).
struct Edit {
  Span span;
  std::string text;
};

using EditScript = std::vector<Edit>;

inline void sort_edits(EditScript& edits) {
  std::stable_sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return a.span.end < b.span.end;
  });
}

/// Verifies edits are sorted and pairwise disjoint. Adjacent edits (one ends
/// where the next begins) are fine; two insertions at the same offset are not,
/// since their order would be ambiguous.
inline void check_disjoint(const EditScript& edits) {
  for (size_t i = 1; i < edits.size(); ++i) {
    const Edit& a = edits[i - 1];
    const Edit& b = edits[i];
    bool overlap = b.span.begin < a.span.end ||
                   (a.span.begin == b.span.begin && a.span.end == b.span.end &&
                    a.span.begin == a.span.end);
    if (overlap)
      throw OverlappingEdits("edits at [" + std::to_string(a.span.begin) + "," +
                             std::to_string(a.span.end) + ") and [" +
                             std::to_string(b.span.begin) + "," +
                             std::to_string(b.span.end) + ") intersect");
  }
}

/// Applies an edit script to the unit's text. Bytes outside every edit span
/// are preserved exactly.
inline SourceUnit render(const SourceUnit& unit, EditScript edits) {
  sort_edits(edits);
  check_disjoint(edits);
  const std::string& src = unit.text();
  std::string out;
  out.reserve(src.size() + 64);
  uint32_t pos = 0;
  for (const Edit& e : edits) {
    if (e.span.end > src.size())
      throw Error("edit span [" + std::to_string(e.span.begin) + "," +
                  std::to_string(e.span.end) + ") exceeds unit size " +
                  std::to_string(src.size()));
    out.append(src, pos, e.span.begin - pos);
    out.append(e.text);
    pos = e.span.end;
  }
  out.append(src, pos, src.size() - pos);
  return SourceUnit::from_string(unit.path(), std::move(out));
}

inline SourceUnit render(const SyntaxTree& tree, EditScript edits) {
  return render(tree.unit(), std::move(edits));
}

/// Maps byte offsets through an edit script. Offsets inside a replaced span
/// map to the start of the replacement.
class OffsetMap {
 public:
  explicit OffsetMap(EditScript edits) : edits_(std::move(edits)) {
    sort_edits(edits_);
  }

  uint32_t map(uint32_t old_offset) const {
    int64_t delta = 0;
    for (const Edit& e : edits_) {
      if (old_offset < e.span.begin) break;
      if (old_offset < e.span.end)
        return static_cast<uint32_t>(e.span.begin + delta);
      delta += static_cast<int64_t>(e.text.size()) - e.span.size();
    }
    return static_cast<uint32_t>(old_offset + delta);
  }

  Span map(Span s) const {
    uint32_t b = map(s.begin);
    uint32_t e = map_end(s.end);
    return {b, std::max(b, e)};
  }

  /// End offsets map past replacements that finish at or before them.
  uint32_t map_end(uint32_t old_end) const {
    int64_t delta = 0;
    for (const Edit& e : edits_) {
      if (old_end <= e.span.begin) break;
      if (old_end < e.span.end)
        return static_cast<uint32_t>(e.span.begin + delta);
      delta += static_cast<int64_t>(e.text.size()) - e.span.size();
    }
    return static_cast<uint32_t>(old_end + delta);
  }

  /// True if the offset fell strictly inside a rewritten span.
  bool was_rewritten(uint32_t old_offset) const {
    for (const Edit& e : edits_) {
      if (old_offset < e.span.begin) return false;
      if (old_offset < e.span.end) return true;
    }
    return false;
  }

 private:
  EditScript edits_;
};

}  // namespace jrecast::syntax
