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

#include <string>
#include <vector>

#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/transform/record.hpp"
#include "jrecast/transform/rewrite_util.hpp"

namespace jrecast::transform {

namespace detail {

/// True if the loop body contains a continue that would bind to this loop:
/// an unlabeled continue not inside a nested loop, or any labeled continue
/// (labels are not rewritten, so those loops are left alone wholesale).
inline bool has_bound_continue(const syntax::SyntaxTree& tree,
                               syntax::NodeId body) {
  bool found = false;
  std::function<void(syntax::NodeId, bool)> scan = [&](syntax::NodeId id,
                                                       bool top) {
    if (found) return;
    const syntax::Node& n = tree.node(id);
    switch (n.kind) {
      case syntax::NodeKind::Continue:
        if (n.name_tok != syntax::kNoTok || top) found = true;
        return;
      case syntax::NodeKind::BasicFor:
      case syntax::NodeKind::While:
      case syntax::NodeKind::DoWhile:
      case syntax::NodeKind::EnhancedFor:
        // unlabeled continues below bind to this nested loop; labeled ones
        // still matter
        for (syntax::NodeId k : n.kids) scan(k, false);
        return;
      case syntax::NodeKind::Lambda:
        return;  // continue cannot cross a lambda boundary
      default:
        for (syntax::NodeId k : n.kids) scan(k, top);
        return;
    }
  };
  scan(body, true);
  return found;
}

}  // namespace detail

// T2: interchange loop forms. Each original basic for-loop becomes an
// equivalent while-loop wrapped in a block that preserves the init scope;
// each original while-loop becomes `for (; cond; )`. Conversion is decided
// from the original tree in a single traversal, so nothing converts twice.
// Loops whose semantics would shift (a continue bound to the loop would skip
// the relocated update) are skipped and recorded.
inline syntax::EditScript t2_loops(const syntax::SyntaxTree& tree,
                                   syntax::NodeId fn, TransformRecord& record) {
  const std::string& src = tree.unit().text();
  SpanRewriter writer(src);

  std::vector<syntax::NodeId> candidates;
  tree.walk(fn, [&](syntax::NodeId id) {
    const syntax::Node& n = tree.node(id);
    if (n.opaque) return false;
    if ((n.kind == syntax::NodeKind::BasicFor ||
         n.kind == syntax::NodeKind::While) &&
        !n.synthetic)
      candidates.push_back(id);
    return true;
  });
  sort_innermost_first(tree, candidates);

  for (syntax::NodeId id : candidates) {
    const syntax::Node& n = tree.node(id);
    syntax::Span loop_span = tree.span(id);

    if (n.kind == syntax::NodeKind::While) {
      if (detail::has_bound_continue(tree, n.kids[1])) {
        record.skipped(Op::T2, loop_span.begin, loop_span.end,
                       "continue-bound-loop");
        continue;
      }
      // rewrite only the header: `while (cond)` -> `for (; cond; )`
      syntax::Span header{loop_span.begin, tree.tok(n.b).span.end};
      std::string cond = writer.slice(tree.span(n.kids[0]));
      writer.add(header, "for (; " + cond + "; )");
      record.applied(Op::T2, header.begin, header.end, "while -> for");
      continue;
    }

    auto parts = syntax::for_parts(tree, id);
    if (detail::has_bound_continue(tree, parts.body)) {
      record.skipped(Op::T2, loop_span.begin, loop_span.end,
                     "continue-bound-loop");
      continue;
    }

    std::string init_text;
    for (syntax::NodeId i : parts.init)
      init_text += writer.slice(tree.span(i)) + "; ";

    std::string cond = parts.cond == syntax::kNoNode
                           ? "true"
                           : writer.slice(tree.span(parts.cond));

    std::string updates;
    for (syntax::NodeId u : parts.update)
      updates += writer.slice(tree.span(u)) + ";";

    const syntax::Node& body = tree.node(parts.body);
    std::string body_text;
    if (body.kind == syntax::NodeKind::Block) {
      syntax::Span bs = tree.span(parts.body);
      std::string inner = writer.slice({bs.begin + 1, bs.end - 1});
      body_text = "{" + inner;
      if (!updates.empty()) body_text += " " + updates;
      body_text += " }";
    } else if (body.kind == syntax::NodeKind::EmptyStmt) {
      body_text = updates.empty() ? "{ }" : "{ " + updates + " }";
    } else {
      body_text = "{ " + writer.slice(tree.span(parts.body));
      if (!updates.empty()) body_text += " " + updates;
      body_text += " }";
    }

    std::string repl = "{ " + init_text + "while (" + cond + ") " + body_text +
                       " }";
    writer.add(loop_span, repl);
    record.applied(Op::T2, loop_span.begin, loop_span.end, "for -> while");
  }
  return writer.top_level_edits();
}

}  // namespace jrecast::transform
