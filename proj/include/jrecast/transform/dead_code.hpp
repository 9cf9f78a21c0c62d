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

#include <set>
#include <string>
#include <vector>

#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/transform/record.hpp"
#include "jrecast/transform/rewrite_util.hpp"

namespace jrecast::transform {

struct DeadCodeResult {
  syntax::EditScript edits;
  // Spans of the injected `if (false) ...` statements in the text that the
  // edit script produces; the pipeline marks these synthetic.
  std::vector<syntax::Span> synthetic_spans;
};

// T4: insert an unreachable, self-contained statement at the head of the
// first min(max_dead_blocks, #blocks) blocks of the function in pre-order.
// The payload references only its own fresh variable, so definite-assignment
// analysis of the surrounding code is untouched. Constructor bodies keep
// their explicit super(...)/this(...) invocation first.
inline DeadCodeResult t4_dead_code(const syntax::SyntaxTree& tree,
                                   syntax::NodeId fn, int max_dead_blocks,
                                   TransformRecord& record) {
  DeadCodeResult result;
  if (max_dead_blocks <= 0) return result;
  const std::string& src = tree.unit().text();
  std::string eol = tree.unit().eol_string();

  std::set<std::string> taken;
  for (const auto& name : syntax::identifier_tokens_in(tree, fn))
    taken.insert(name);

  std::vector<syntax::NodeId> blocks;
  tree.walk(fn, [&](syntax::NodeId id) {
    const syntax::Node& n = tree.node(id);
    if (n.opaque) return false;
    if (n.kind == syntax::NodeKind::Block && !n.synthetic)
      blocks.push_back(id);
    return true;
  });
  std::stable_sort(blocks.begin(), blocks.end(),
                   [&](syntax::NodeId a, syntax::NodeId b) {
                     return tree.span(a).begin < tree.span(b).begin;
                   });

  syntax::NodeId body = syntax::function_body(tree, fn);
  bool is_ctor = tree.node(fn).kind == syntax::NodeKind::CtorDecl;

  int64_t delta = 0;  // cumulative growth, for post-edit span calculation
  int k = 0;
  for (syntax::NodeId block : blocks) {
    if (k >= max_dead_blocks) break;
    const syntax::Node& bn = tree.node(block);

    uint32_t insert_at = tree.tok(bn.tok_begin).span.end;  // just after '{'
    if (is_ctor && block == body && !bn.kids.empty() &&
        tree.node(bn.kids[0]).kind == syntax::NodeKind::CtorInvokeStmt)
      insert_at = tree.span(bn.kids[0]).end;

    std::string var;
    for (int suffix = k;; ++suffix) {
      var = "__dead_" + std::to_string(suffix);
      if (!taken.count(var)) break;
    }
    taken.insert(var);

    std::string indent;
    if (!bn.kids.empty() &&
        tree.span(bn.kids[0]).begin >= insert_at)
      indent = indent_at(src, tree.span(bn.kids[0]).begin);
    else
      indent = indent_at(src, tree.span(block).begin) + "    ";

    std::string payload = "if (false) { long " + var + " = 0L; " + var +
                          " = " + var + " + 1L; }";
    std::string text = eol + indent + payload;

    result.edits.push_back({{insert_at, insert_at}, text});
    uint32_t new_begin = static_cast<uint32_t>(insert_at + delta +
                                               (text.size() - payload.size()));
    result.synthetic_spans.push_back(
        {new_begin, new_begin + static_cast<uint32_t>(payload.size())});
    delta += static_cast<int64_t>(text.size());
    record.applied(Op::T4, insert_at, insert_at, "dead block " + var);
    k++;
  }
  return result;
}

}  // namespace jrecast::transform
