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

#include "jrecast/syntax/bindings.hpp"
#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/transform/name_provider.hpp"
#include "jrecast/transform/record.hpp"

namespace jrecast::transform {

// T1: rename every resolvable local and parameter to a fresh provider name.
// Fresh names are chosen against the set of all identifier tokens occurring
// in the function plus everything assigned so far, so no rename can capture
// or shadow anything. Bindings the resolver excluded stay untouched and are
// recorded as skips.
inline syntax::EditScript t1_rename(const syntax::SyntaxTree& tree,
                                    syntax::NodeId fn,
                                    const syntax::BindingTable& bindings,
                                    NameProvider& provider,
                                    TransformRecord& record) {
  syntax::EditScript edits;
  std::set<std::string> taken;
  for (const auto& name : syntax::identifier_tokens_in(tree, fn))
    taken.insert(name);

  size_t decl_index = 0;
  for (const auto& entry : bindings.entries) {
    std::string fresh = provider.fresh(decl_index++, taken);
    taken.insert(fresh);
    syntax::Span decl_span = tree.tok(entry.name_tok).span;
    edits.push_back({decl_span, fresh});
    for (syntax::NodeId ref : entry.refs)
      edits.push_back({tree.tok(tree.node(ref).name_tok).span, fresh});
    record.applied(Op::T1, decl_span.begin, decl_span.end,
                   entry.name + " -> " + fresh + " (" +
                       std::to_string(entry.refs.size()) + " refs)");
  }
  for (const auto& diag : bindings.diagnostics) {
    if (diag.reason.rfind("excluded", 0) == 0)
      record.skipped(Op::T1, diag.offset, diag.offset, "shadow-risk:" + diag.name);
  }
  return edits;
}

}  // namespace jrecast::transform
