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

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/transform/record.hpp"
#include "jrecast/transform/rewrite_util.hpp"

namespace jrecast::transform {

namespace detail {

using syntax::Node;
using syntax::NodeId;
using syntax::NodeKind;
using syntax::SyntaxTree;

struct GroupView {
  std::vector<NodeId> labels;  // CaseLabel nodes
  std::vector<NodeId> stmts;
  bool is_default = false;
};

inline std::vector<GroupView> group_views(const SyntaxTree& tree, NodeId sw) {
  std::vector<GroupView> out;
  const Node& n = tree.node(sw);
  for (size_t i = 1; i < n.kids.size(); ++i) {
    const Node& g = tree.node(n.kids[i]);
    if (g.kind != NodeKind::SwitchGroup) continue;
    GroupView v;
    for (NodeId k : g.kids) {
      if (tree.node(k).kind == NodeKind::CaseLabel) {
        v.labels.push_back(k);
        if (tree.node(k).flag) v.is_default = true;
      } else {
        v.stmts.push_back(k);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

enum class LabelClass { IntLike, StringLike, Other };

inline LabelClass classify_label_expr(const SyntaxTree& tree, NodeId e) {
  const Node& n = tree.node(e);
  if (n.kind == NodeKind::Literal) {
    switch (tree.tok(n.a).kind) {
      case syntax::TokKind::IntLit:
      case syntax::TokKind::CharLit:
        return LabelClass::IntLike;
      case syntax::TokKind::StringLit:
        return LabelClass::StringLike;
      default:
        return LabelClass::Other;
    }
  }
  if (n.kind == NodeKind::Unary && tree.tok_text(n.a) == "-" &&
      classify_label_expr(tree, n.kids[0]) == LabelClass::IntLike)
    return LabelClass::IntLike;
  return LabelClass::Other;
}

/// Walks statements that share this switch's break binding: descends through
/// blocks, ifs, labeled statements, try/catch/finally and synchronized, and
/// stops at anything that captures break (loops, switches) or is a separate
/// body (lambdas, local classes, opaque regions).
inline void walk_break_scope(const SyntaxTree& tree, NodeId id,
                             const std::function<void(NodeId)>& on_break,
                             const std::function<void(NodeId)>& on_seq_owner) {
  const Node& n = tree.node(id);
  if (n.opaque) return;
  switch (n.kind) {
    case NodeKind::Break:
      if (n.name_tok == syntax::kNoTok) on_break(id);
      return;
    case NodeKind::Block:
      on_seq_owner(id);
      for (NodeId k : n.kids) walk_break_scope(tree, k, on_break, on_seq_owner);
      return;
    case NodeKind::If:
      for (size_t i = 1; i < n.kids.size(); ++i)
        walk_break_scope(tree, n.kids[i], on_break, on_seq_owner);
      return;
    case NodeKind::Labeled:
      walk_break_scope(tree, n.kids[0], on_break, on_seq_owner);
      return;
    case NodeKind::Try:
      for (NodeId k : n.kids) {
        NodeKind kk = tree.node(k).kind;
        if (kk == NodeKind::Block)
          walk_break_scope(tree, k, on_break, on_seq_owner);
        else if (kk == NodeKind::CatchClause)
          walk_break_scope(tree, tree.node(k).kids[1], on_break, on_seq_owner);
      }
      return;
    case NodeKind::Synchronized:
      walk_break_scope(tree, n.kids[1], on_break, on_seq_owner);
      return;
    default:
      return;  // loops, switches, lambdas, declarations, expressions
  }
}

inline bool contains_bound_break(const SyntaxTree& tree, NodeId id) {
  bool found = false;
  walk_break_scope(tree, id, [&](NodeId) { found = true; }, [](NodeId) {});
  return found;
}

}  // namespace detail

// T3: lower each eligible switch statement to an if-chain driven by a
// fall-through flag and, when the switch contains bound breaks, a break
// flag. The selector is hoisted once into a fresh temporary; each case group
// i becomes `if (!__brk && (__ft || MATCH_i)) { __ft = true; body }`; the
// default group takes `!__brk` and must already be last. Bound breaks become
// `__brk = true;` with every statement after them in their enclosing
// sequence wrapped in `if (!__brk) { ... }`, recursively.
//
// Skips (recorded, never errors): non-literal labels (enum constants need
// type information), arrow-form switches, a default group that is not last,
// and declarations used across groups (the lowered groups become separate
// scopes).
inline syntax::EditScript t3_switch(const syntax::SyntaxTree& tree,
                                    syntax::NodeId fn,
                                    std::set<std::string>& taken_names,
                                    TransformRecord& record) {
  using namespace detail;
  const std::string& src = tree.unit().text();
  std::string eol = tree.unit().eol_string();
  SpanRewriter writer(src);

  for (const auto& name : syntax::identifier_tokens_in(tree, fn))
    taken_names.insert(name);
  auto fresh = [&](const std::string& base) {
    std::string cand = base;
    for (int i = 2; taken_names.count(cand); ++i)
      cand = base + std::to_string(i);
    taken_names.insert(cand);
    return cand;
  };

  std::vector<NodeId> candidates;
  tree.walk(fn, [&](NodeId id) {
    const Node& n = tree.node(id);
    if (n.opaque) return false;
    if (n.kind == NodeKind::Switch && !n.synthetic) candidates.push_back(id);
    return true;
  });
  sort_innermost_first(tree, candidates);

  for (NodeId sw : candidates) {
    const Node& n = tree.node(sw);
    syntax::Span sw_span = tree.span(sw);
    auto skip = [&](const std::string& reason) {
      record.skipped(Op::T3, sw_span.begin, sw_span.end, reason);
    };

    if (n.flag) {  // arrow-form groups
      skip("unsupported-switch-shape");
      continue;
    }
    auto groups = group_views(tree, sw);

    bool labels_ok = true;
    bool any_string = false, any_int = false;
    for (const auto& g : groups) {
      for (NodeId lbl : g.labels) {
        for (NodeId e : tree.node(lbl).kids) {
          switch (classify_label_expr(tree, e)) {
            case LabelClass::IntLike: any_int = true; break;
            case LabelClass::StringLike: any_string = true; break;
            case LabelClass::Other: labels_ok = false; break;
          }
        }
      }
    }
    if (!labels_ok || (any_string && any_int)) {
      skip("label-needs-type-info");
      continue;
    }

    bool default_ok = true;
    for (size_t g = 0; g + 1 < groups.size(); ++g)
      if (groups[g].is_default) default_ok = false;
    if (!default_ok) {
      skip("default-not-last");
      continue;
    }

    // declarations at group level leak across groups in a real switch but
    // would become block-scoped after lowering
    bool cross_decl = false;
    for (size_t g = 0; g + 1 < groups.size() && !cross_decl; ++g) {
      for (NodeId s : groups[g].stmts) {
        const Node& sn = tree.node(s);
        std::vector<std::string> declared;
        if (sn.kind == NodeKind::LocalVarDecl) {
          for (NodeId d : sn.kids)
            declared.emplace_back(tree.tok_text(tree.node(d).name_tok));
        } else if (sn.kind == NodeKind::LocalTypeDecl) {
          cross_decl = true;
          break;
        }
        if (declared.empty()) continue;
        for (size_t h = g + 1; h < groups.size() && !cross_decl; ++h) {
          for (NodeId hs : groups[h].stmts) {
            const Node& hn = tree.node(hs);
            for (uint32_t t = hn.tok_begin; t <= hn.tok_end; ++t) {
              if (tree.tok(t).kind != syntax::TokKind::Ident) continue;
              std::string_view tx = tree.tok_text(t);
              for (const auto& d : declared)
                if (tx == d) cross_decl = true;
            }
          }
        }
      }
    }
    if (cross_decl) {
      skip("cross-group-declaration");
      continue;
    }

    bool has_break = false;
    for (const auto& g : groups)
      for (NodeId s : g.stmts)
        if (contains_bound_break(tree, s)) has_break = true;

    std::string sel = fresh("__sel");
    std::string ft = fresh("__ft");
    std::string brk = has_break ? fresh("__brk") : "";

    std::string sel_type = any_string ? "String" : "int";
    std::string ind = indent_at(src, sw_span.begin);
    std::string ind2 = ind + "    ";

    std::string out = "{";
    out += eol + ind2 + sel_type + " " + sel + " = (" +
           writer.slice(tree.span(n.kids[0])) + ");";
    out += eol + ind2 + "boolean " + ft + " = false;";
    if (has_break) out += eol + ind2 + "boolean " + brk + " = false;";

    for (const auto& g : groups) {
      std::string match;
      if (!g.is_default) {
        for (NodeId lbl : g.labels) {
          for (NodeId e : tree.node(lbl).kids) {
            if (!match.empty()) match += " || ";
            std::string lit = writer.slice(tree.span(e));
            match += any_string ? sel + ".equals(" + lit + ")"
                                : sel + " == " + lit;
          }
        }
      }
      std::string cond;
      if (g.is_default) {
        cond = has_break ? "!" + brk : "true";
      } else {
        cond = "(" + ft + " || " + match + ")";
        if (has_break) cond = "!" + brk + " && " + cond;
      }

      // body with bound breaks replaced and trailing statements guarded
      std::string body;
      if (!g.stmts.empty()) {
        syntax::EditScript local;
        std::function<void(const std::vector<NodeId>&)> guard_seq =
            [&](const std::vector<NodeId>& stmts) {
              int opens = 0;
              for (size_t i = 0; i < stmts.size(); ++i) {
                if (contains_bound_break(tree, stmts[i]) &&
                    i + 1 < stmts.size()) {
                  uint32_t at = tree.span(stmts[i + 1]).begin;
                  local.push_back({{at, at}, "if (!" + brk + ") { "});
                  opens++;
                }
              }
              if (opens > 0) {
                uint32_t end = tree.span(stmts.back()).end;
                std::string closes;
                for (int i = 0; i < opens; ++i) closes += " }";
                local.push_back({{end, end}, closes});
              }
            };
        for (NodeId s : g.stmts)
          walk_break_scope(
              tree, s,
              [&](NodeId b) {
                local.push_back({tree.span(b), brk + " = true;"});
              },
              [&](NodeId block) {
                std::vector<NodeId> kids = tree.node(block).kids;
                guard_seq(kids);
              });
        guard_seq(g.stmts);
        syntax::Span body_span{tree.span(g.stmts.front()).begin,
                               tree.span(g.stmts.back()).end};
        body = writer.slice_with(body_span, std::move(local));
      }

      out += eol + ind2 + "if (" + cond + ") { " + ft + " = true;";
      if (!body.empty()) out += " " + body;
      out += " }";
    }
    out += eol + ind + "}";

    writer.add(sw_span, out);
    record.applied(Op::T3, sw_span.begin, sw_span.end,
                   "switch -> if-chain (" + std::to_string(groups.size()) +
                       " groups" + (has_break ? ", break flag" : "") + ")");
  }
  return writer.top_level_edits();
}

}  // namespace jrecast::transform
