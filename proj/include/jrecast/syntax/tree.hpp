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
#include <string>
#include <string_view>
#include <vector>

#include "jrecast/syntax/lexer.hpp"
#include "jrecast/syntax/source.hpp"

namespace jrecast::syntax {

using NodeId = uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFF;
inline constexpr uint32_t kNoTok = 0xFFFFFFFF;

enum class NodeKind : uint8_t {
  CompilationUnit,
  PackageDecl,
  ImportDecl,
  TypeDecl,        // class / interface / enum / record / @interface
  ClassBody,
  FieldDecl,
  MethodDecl,      // name_tok = method name; kids: params..., [body]
  CtorDecl,        // same layout as MethodDecl
  InitializerBlock,
  Param,           // name_tok = parameter name
  OpaqueMember,    // member we do not model; balanced token range

  // Statements
  Block,
  LocalVarDecl,    // a..b = type token range; kids: Declarator...
  Declarator,      // name_tok; kids: [init expr]
  ExprStmt,
  CtorInvokeStmt,  // leading super(...) / this(...) in a constructor
  If,              // a = '(' tok, b = ')' tok; kids: cond, then, [else]
  While,           // a = '(' tok, b = ')' tok; kids: cond, body
  DoWhile,         // kids: body, cond; a = '(' tok, b = ')' tok
  BasicFor,        // a,b = the two ';' toks, c = ')' tok; kids: init...,[cond],update...,body
  EnhancedFor,     // a = ':' tok, b = ')' tok; kids: Param, iterable, body
  Switch,          // a = '(' tok, b = ')' tok; kids: selector, SwitchGroup...
  SwitchGroup,     // kids: CaseLabel..., statements...
  CaseLabel,       // a = label expr token begin, b = label token end (kNoTok for default)
  Break,           // name_tok = label if present
  Continue,        // name_tok = label if present
  Return,          // kids: [expr]
  Throw,           // kids: expr
  Try,             // kids: [resource decls...], Block, CatchClause..., [finally Block]
  CatchClause,     // kids: Param, Block
  Synchronized,    // kids: expr, Block
  Labeled,         // name_tok = label; kids: stmt
  Assert,          // kids: expr, [detail expr]
  EmptyStmt,
  LocalTypeDecl,   // class declared inside a body
  Yield,           // kids: expr
  OpaqueStmt,      // unmodeled statement; balanced token range

  // Expressions
  Ident,           // simple name in expression position; name_tok
  Literal,         // single literal token
  Paren,           // kids: inner
  Unary,           // a = op tok; kids: operand
  PreIncDec,       // a = op tok; kids: operand
  PostIncDec,      // a = op tok; kids: operand
  Binary,          // a = first op tok, b = last op tok (merged '>' runs); kids: lhs, rhs
  InstanceOf,      // kids: expr; type tokens follow
  Ternary,         // kids: cond, then, else
  Assign,          // a = op tok; kids: lhs, rhs
  Call,            // name_tok = method name; kids: [receiver], args...
  FieldAccess,     // name_tok = field name; kids: receiver
  ArrayAccess,     // kids: array, index
  NewObject,       // a..b = type token range; kids: args..., [ClassBody]
  NewArray,        // kids: dim exprs..., [ArrayInit]
  ArrayInit,       // kids: element exprs...
  Cast,            // a..b = type token range; kids: operand
  Lambda,          // kids: Param..., body (expr or Block)
  MethodRef,       // receiver tokens + '::' + name; kids: [receiver expr]
  ThisExpr,
  SuperExpr,
  ClassLiteral,    // Foo.class
  OpaqueExpr,      // unmodeled expression; balanced token range
};

inline bool is_statement_kind(NodeKind k) {
  switch (k) {
    case NodeKind::Block: case NodeKind::LocalVarDecl: case NodeKind::ExprStmt:
    case NodeKind::CtorInvokeStmt: case NodeKind::If: case NodeKind::While:
    case NodeKind::DoWhile: case NodeKind::BasicFor: case NodeKind::EnhancedFor:
    case NodeKind::Switch: case NodeKind::Break: case NodeKind::Continue:
    case NodeKind::Return: case NodeKind::Throw: case NodeKind::Try:
    case NodeKind::Synchronized: case NodeKind::Labeled: case NodeKind::Assert:
    case NodeKind::EmptyStmt: case NodeKind::LocalTypeDecl: case NodeKind::Yield:
    case NodeKind::OpaqueStmt:
      return true;
    default:
      return false;
  }
}

struct Node {
  NodeKind kind = NodeKind::OpaqueStmt;
  uint32_t tok_begin = 0;   // inclusive token index range
  uint32_t tok_end = 0;
  NodeId parent = kNoNode;
  std::vector<NodeId> kids;
  uint32_t name_tok = kNoTok;
  uint32_t a = kNoTok;      // kind-specific token index (see NodeKind comments)
  uint32_t b = kNoTok;
  uint32_t c = kNoTok;
  bool synthetic = false;
  bool opaque = false;
  // TypeDecl / Switch specific flags
  bool flag = false;        // Switch: has arrow groups; TypeDecl: is class-like
};

/// Lossless concrete syntax tree. Nodes reference token index ranges; token
/// spans reference bytes of the SourceUnit, so unedited regions can always be
/// reproduced exactly from the original text.
class SyntaxTree {
 public:
  SyntaxTree(SourceUnit unit, std::vector<Token> toks)
      : unit_(std::move(unit)), toks_(std::move(toks)) {}

  const SourceUnit& unit() const { return unit_; }
  const std::vector<Token>& tokens() const { return toks_; }
  const Token& tok(uint32_t i) const { return toks_[i]; }
  std::string_view tok_text(uint32_t i) const { return unit_.slice(toks_[i].span); }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  Node& node_mut(NodeId id) { return nodes_[id]; }
  size_t node_count() const { return nodes_.size(); }

  Span span(NodeId id) const {
    const Node& n = nodes_[id];
    return {toks_[n.tok_begin].span.begin, toks_[n.tok_end].span.end};
  }
  std::string_view text(NodeId id) const { return unit_.slice(span(id)); }

  /// Pre-order traversal of the subtree rooted at id.
  void walk(NodeId id, const std::function<bool(NodeId)>& visit) const {
    if (!visit(id)) return;
    for (NodeId k : nodes_[id].kids) walk(k, visit);
  }

  std::vector<NodeId> collect(NodeId under, NodeKind kind) const {
    std::vector<NodeId> out;
    walk(under, [&](NodeId id) {
      if (nodes_[id].kind == kind) out.push_back(id);
      return true;
    });
    return out;
  }

  /// True if any strict ancestor of id is opaque.
  bool inside_opaque(NodeId id) const {
    for (NodeId p = nodes_[id].parent; p != kNoNode; p = nodes_[p].parent)
      if (nodes_[p].opaque) return true;
    return false;
  }

  /// Marks as synthetic every node whose byte span lies inside one of the
  /// given spans. Used by the pipeline to carry injected-code marks across
  /// the re-parse between stages.
  void mark_synthetic(const std::vector<Span>& spans) {
    if (spans.empty()) return;
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      Span s = span(id);
      for (const Span& m : spans) {
        if (m.begin <= s.begin && s.end <= m.end) {
          nodes_[id].synthetic = true;
          break;
        }
      }
    }
  }

  /// All opaque regions, for the diagnostics side channel.
  std::vector<Span> opaque_regions() const {
    std::vector<Span> out;
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].opaque && (nodes_[id].parent == kNoNode || !inside_opaque(id)))
        out.push_back(span(id));
    return out;
  }

  // Construction interface, used by the parser.
  NodeId add(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }
  void set_root(NodeId id) { root_ = id; }
  void link() {
    for (NodeId id = 0; id < nodes_.size(); ++id)
      for (NodeId k : nodes_[id].kids) nodes_[k].parent = id;
  }
  void truncate(size_t n) { nodes_.resize(n); }

 private:
  SourceUnit unit_;
  std::vector<Token> toks_;
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

}  // namespace jrecast::syntax
