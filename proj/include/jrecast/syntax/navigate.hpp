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
#include <string_view>
#include <vector>

#include "jrecast/support/error.hpp"
#include "jrecast/syntax/tree.hpp"

namespace jrecast::syntax {

inline bool is_function_kind(NodeKind k) {
  return k == NodeKind::MethodDecl || k == NodeKind::CtorDecl;
}

/// All method/constructor declarations in the tree, in pre-order.
inline std::vector<NodeId> all_functions(const SyntaxTree& tree) {
  std::vector<NodeId> out;
  tree.walk(tree.root(), [&](NodeId id) {
    if (is_function_kind(tree.node(id).kind)) out.push_back(id);
    return true;
  });
  return out;
}

inline std::string_view function_name(const SyntaxTree& tree, NodeId fn) {
  return tree.tok_text(tree.node(fn).name_tok);
}

/// The body block of a function, or kNoNode for abstract declarations.
inline NodeId function_body(const SyntaxTree& tree, NodeId fn) {
  const Node& n = tree.node(fn);
  for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it)
    if (tree.node(*it).kind == NodeKind::Block) return *it;
  return kNoNode;
}

/// Finds the method or constructor declaration named `name` whose span
/// contains `line_hint`. Ties (nested or local classes) go to the smallest
/// enclosing span.
inline NodeId locate_function(const SyntaxTree& tree, std::string_view name,
                              int line_hint) {
  NodeId best = kNoNode;
  uint32_t best_size = 0xFFFFFFFF;
  bool name_seen = false;
  for (NodeId fn : all_functions(tree)) {
    if (function_name(tree, fn) != name) continue;
    name_seen = true;
    Span s = tree.span(fn);
    int first = tree.unit().line_of(s.begin);
    int last = tree.unit().line_of(s.end > 0 ? s.end - 1 : 0);
    if (line_hint < first || line_hint > last) continue;
    if (s.size() < best_size) {
      best = fn;
      best_size = s.size();
    }
  }
  if (best != kNoNode) return best;
  if (name_seen)
    throw AmbiguousFunction("function '" + std::string(name) +
                            "' exists but no declaration contains line " +
                            std::to_string(line_hint) + " in " +
                            tree.unit().path());
  throw FunctionNotFound("function '" + std::string(name) + "' not found in " +
                         tree.unit().path());
}

/// Structured view of a BasicFor node's children.
struct ForParts {
  std::vector<NodeId> init;    // declarations or expressions
  NodeId cond = kNoNode;       // absent means "forever"
  std::vector<NodeId> update;
  NodeId body = kNoNode;
};

inline ForParts for_parts(const SyntaxTree& tree, NodeId id) {
  const Node& n = tree.node(id);
  ForParts p;
  for (size_t i = 0; i < n.kids.size(); ++i) {
    NodeId k = n.kids[i];
    if (i + 1 == n.kids.size()) {
      p.body = k;
      break;
    }
    uint32_t tb = tree.node(k).tok_begin;
    if (tb < n.a) p.init.push_back(k);
    else if (tb < n.b) p.cond = k;
    else p.update.push_back(k);
  }
  return p;
}

/// Every identifier-like token inside the function's span, including tokens
/// in opaque regions and comments are excluded (token stream only). Used to
/// pick fresh names that cannot collide or capture.
inline std::vector<std::string> identifier_tokens_in(const SyntaxTree& tree,
                                                     NodeId fn) {
  std::vector<std::string> out;
  const Node& n = tree.node(fn);
  for (uint32_t i = n.tok_begin; i <= n.tok_end; ++i) {
    const Token& t = tree.tok(i);
    if (t.kind == TokKind::Ident) out.emplace_back(tree.tok_text(i));
  }
  return out;
}

}  // namespace jrecast::syntax
