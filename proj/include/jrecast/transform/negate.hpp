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

#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/transform/record.hpp"
#include "jrecast/transform/rewrite_util.hpp"

namespace jrecast::transform {

// T5: wrap every if-statement predicate in a double negation: P becomes
// !(!(P)) with the original predicate text preserved verbatim inside. The
// synthetic ifs injected by T4 are excluded, so the dead code keeps its
// documented shape. Conditions can nest (an if inside a lambda inside
// another condition), which the SpanRewriter handles innermost-first.
inline syntax::EditScript t5_double_negate(const syntax::SyntaxTree& tree,
                                           syntax::NodeId fn,
                                           TransformRecord& record) {
  SpanRewriter writer(tree.unit().text());

  std::vector<syntax::NodeId> ifs;
  tree.walk(fn, [&](syntax::NodeId id) {
    const syntax::Node& n = tree.node(id);
    if (n.opaque) return false;
    if (n.kind == syntax::NodeKind::If) ifs.push_back(id);
    return true;
  });

  std::vector<syntax::NodeId> conds;
  for (syntax::NodeId id : ifs) {
    const syntax::Node& n = tree.node(id);
    if (n.synthetic) {
      syntax::Span s = tree.span(id);
      record.skipped(Op::T5, s.begin, s.end, "synthetic-if");
      continue;
    }
    conds.push_back(n.kids[0]);
  }
  sort_innermost_first(tree, conds);

  for (syntax::NodeId cond : conds) {
    syntax::Span s = tree.span(cond);
    writer.add(s, "!(!(" + writer.slice(s) + "))");
    record.applied(Op::T5, s.begin, s.end, "double-negate predicate");
  }
  return writer.top_level_edits();
}

}  // namespace jrecast::transform
