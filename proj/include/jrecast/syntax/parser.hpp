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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jrecast/syntax/lexer.hpp"
#include "jrecast/syntax/source.hpp"
#include "jrecast/syntax/tree.hpp"

namespace jrecast::syntax {

/// Recursive-descent parser for a pragmatic slice of Java. Constructs the
/// parser cannot model become opaque nodes covering a balanced token range;
/// transformations never fire inside opaque regions, so unknown syntax costs
/// coverage, not correctness. Bracket balance is validated up front, which
/// makes the opaque fallback total: any lexable, balanced file parses.
class Parser {
 public:
  explicit Parser(SourceUnit unit) : tree_(std::move(unit), {}) {}

  SyntaxTree run() {
    toks_ = tokenize(tree_.unit());
    check_balance();
    tree_ = SyntaxTree(tree_.unit(), toks_);
    NodeId root = parse_compilation_unit();
    tree_.set_root(root);
    tree_.link();
    return std::move(tree_);
  }

 private:
  struct Bail {};  // internal backtracking signal; never escapes run()

  // ---- token cursor -------------------------------------------------------

  const Token& cur() const { return toks_[p_]; }
  const Token& peek(size_t k) const {
    size_t i = p_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool done() const { return cur().kind == TokKind::End; }
  std::string_view ttext(size_t i) const {
    return tree_.unit().slice(toks_[i].span);
  }
  std::string_view cur_text() const { return ttext(p_); }

  bool is_punct(std::string_view s, size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == TokKind::Punct && tree_.unit().slice(t.span) == s;
  }
  bool is_kw(std::string_view s, size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == TokKind::Keyword && tree_.unit().slice(t.span) == s;
  }
  bool is_ident(size_t k = 0) const { return peek(k).kind == TokKind::Ident; }
  bool is_ident(std::string_view s, size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == TokKind::Ident && tree_.unit().slice(t.span) == s;
  }

  uint32_t eat() { return static_cast<uint32_t>(p_++); }
  void expect_punct(std::string_view s) {
    if (!is_punct(s)) throw Bail{};
    p_++;
  }
  bool accept_punct(std::string_view s) {
    if (is_punct(s)) { p_++; return true; }
    return false;
  }
  bool accept_kw(std::string_view s) {
    if (is_kw(s)) { p_++; return true; }
    return false;
  }

  bool adjacent(size_t i, size_t j) const {
    return toks_[i].span.end == toks_[j].span.begin;
  }

  struct Mark {
    size_t pos;
    size_t nodes;
  };
  Mark save() { return {p_, tree_.node_count()}; }
  void restore(Mark m) {
    p_ = m.pos;
    tree_.truncate(m.nodes);
  }

  NodeId add(Node n) { return tree_.add(std::move(n)); }

  [[noreturn]] void syntax_error(const std::string& msg, const Token& t) const {
    throw SyntaxError(tree_.unit().path() + ": " + msg, t.line, t.column);
  }

  // ---- bracket balance ----------------------------------------------------

  void check_balance() {
    std::vector<size_t> stack;
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (toks_[i].kind != TokKind::Punct) continue;
      std::string_view s = tree_.unit().slice(toks_[i].span);
      if (s == "(" || s == "[" || s == "{") {
        stack.push_back(i);
      } else if (s == ")" || s == "]" || s == "}") {
        char want = s == ")" ? '(' : s == "]" ? '[' : '{';
        if (stack.empty() ||
            tree_.unit().slice(toks_[stack.back()].span)[0] != want)
          syntax_error("unbalanced '" + std::string(s) + "'", toks_[i]);
        stack.pop_back();
      }
    }
    if (!stack.empty())
      syntax_error("unclosed '" +
                       std::string(tree_.unit().slice(toks_[stack.back()].span)) +
                       "'",
                   toks_[stack.back()]);
  }

  /// Consumes one balanced statement-ish unit for error recovery: a balanced
  /// {...} if the cursor is at '{', otherwise everything up to and including
  /// the next ';' at depth zero, stopping before a '}' that closes the
  /// enclosing block.
  void consume_opaque_unit() {
    int depth = 0;
    bool any = false;
    while (!done()) {
      if (cur().kind == TokKind::Punct) {
        std::string_view s = cur_text();
        if (s == "(" || s == "[") depth++;
        if (s == ")" || s == "]") depth--;
        if (s == "{") {
          if (!any) {  // leading block: consume it wholly and stop
            consume_balanced_braces();
            return;
          }
          depth++;
          p_++;
          any = true;
          continue;
        }
        if (s == "}") {
          if (depth == 0) return;  // belongs to the enclosing block
          depth--;
          p_++;
          any = true;
          continue;
        }
        if (s == ";" && depth <= 0) {
          p_++;
          return;
        }
      }
      p_++;
      any = true;
    }
  }

  void consume_balanced_braces() {
    expect_or_die("{");
    int depth = 1;
    while (!done() && depth > 0) {
      if (cur().kind == TokKind::Punct) {
        std::string_view s = cur_text();
        if (s == "{") depth++;
        if (s == "}") depth--;
      }
      p_++;
    }
  }

  void consume_balanced_parens() {
    expect_or_die("(");
    int depth = 1;
    while (!done() && depth > 0) {
      if (cur().kind == TokKind::Punct) {
        std::string_view s = cur_text();
        if (s == "(") depth++;
        if (s == ")") depth--;
      }
      p_++;
    }
  }

  void expect_or_die(std::string_view s) {
    if (!is_punct(s)) syntax_error("expected '" + std::string(s) + "'", cur());
    p_++;
  }

  /// Token index of the ')' matching the '(' at index open.
  size_t matching_paren(size_t open) const {
    int depth = 0;
    for (size_t i = open; i < toks_.size(); ++i) {
      if (toks_[i].kind != TokKind::Punct) continue;
      std::string_view s = tree_.unit().slice(toks_[i].span);
      if (s == "(") depth++;
      if (s == ")") {
        depth--;
        if (depth == 0) return i;
      }
    }
    return toks_.size() - 1;
  }

  // ---- compilation unit ---------------------------------------------------

  NodeId parse_compilation_unit() {
    Node cu;
    cu.kind = NodeKind::CompilationUnit;
    cu.tok_begin = 0;
    std::vector<NodeId> kids;
    while (!done()) {
      if (is_punct(";")) {
        Node e;
        e.kind = NodeKind::EmptyStmt;
        e.tok_begin = e.tok_end = static_cast<uint32_t>(p_);
        p_++;
        kids.push_back(add(std::move(e)));
        continue;
      }
      if (is_kw("package") || is_kw("import")) {
        Node n;
        n.kind = is_kw("package") ? NodeKind::PackageDecl : NodeKind::ImportDecl;
        n.tok_begin = static_cast<uint32_t>(p_);
        while (!done() && !is_punct(";")) p_++;
        if (!done()) p_++;
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        kids.push_back(add(std::move(n)));
        continue;
      }
      kids.push_back(parse_type_decl_or_opaque());
    }
    cu.tok_end = toks_.size() > 1 ? static_cast<uint32_t>(toks_.size() - 2) : 0;
    cu.kids = std::move(kids);
    return add(std::move(cu));
  }

  NodeId parse_type_decl_or_opaque() {
    Mark m = save();
    try {
      return parse_type_decl();
    } catch (Bail&) {
      restore(m);
      Node n;
      n.kind = NodeKind::OpaqueMember;
      n.opaque = true;
      n.tok_begin = static_cast<uint32_t>(p_);
      consume_opaque_unit();
      if (p_ == m.pos) p_++;  // always make progress
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
  }

  void skip_annotations_and_modifiers() {
    while (!done()) {
      if (is_punct("@") && (is_ident(1) || is_kw("interface", 1))) {
        if (is_kw("interface", 1)) return;  // @interface declaration
        p_++;  // '@'
        p_++;  // name head
        while (is_punct(".") && is_ident(1)) { p_ += 2; }
        if (is_punct("(")) consume_balanced_parens();
        continue;
      }
      if (cur().kind == TokKind::Keyword) {
        std::string_view s = cur_text();
        if (s == "public" || s == "protected" || s == "private" ||
            s == "static" || s == "final" || s == "abstract" ||
            s == "native" || s == "transient" || s == "volatile" ||
            s == "strictfp" || s == "default" || s == "synchronized") {
          // 'static {' starts an initializer, 'synchronized (' a statement
          if ((s == "static" || s == "synchronized") &&
              (is_punct("{", 1) || is_punct("(", 1)))
            return;
          p_++;
          continue;
        }
      }
      if (is_ident("sealed")) { p_++; continue; }
      return;
    }
  }

  NodeId parse_type_decl() {
    uint32_t start = static_cast<uint32_t>(p_);
    skip_annotations_and_modifiers();
    Node n;
    n.kind = NodeKind::TypeDecl;
    n.tok_begin = start;
    bool is_enum = false, is_record = false, is_annotation = false;
    if (accept_kw("class") || accept_kw("interface")) {
      n.flag = true;
    } else if (accept_kw("enum")) {
      is_enum = true;
      n.flag = true;
    } else if (is_punct("@") && is_kw("interface", 1)) {
      p_ += 2;
      is_annotation = true;
    } else if (is_ident("record") && is_ident(1)) {
      p_++;
      is_record = true;
      n.flag = true;
    } else {
      throw Bail{};
    }
    if (!is_ident()) throw Bail{};
    n.name_tok = eat();
    if (is_punct("<")) skip_type_args();
    if (is_record) {
      if (!is_punct("(")) throw Bail{};
      consume_balanced_parens();
    }
    // extends / implements / permits clauses: consume up to the body
    while (!done() && !is_punct("{")) {
      if (is_punct(";") || is_punct("}")) throw Bail{};
      if (is_punct("<")) { skip_type_args(); continue; }
      p_++;
    }
    if (!is_punct("{")) throw Bail{};
    NodeId body = is_enum ? parse_enum_body() : parse_class_body();
    n.kids.push_back(body);
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    (void)is_annotation;
    return add(std::move(n));
  }

  NodeId parse_class_body() {
    Node body;
    body.kind = NodeKind::ClassBody;
    body.tok_begin = static_cast<uint32_t>(p_);
    expect_punct("{");
    std::vector<NodeId> kids;
    while (!done() && !is_punct("}")) kids.push_back(parse_member_or_opaque());
    expect_punct("}");
    body.tok_end = static_cast<uint32_t>(p_ - 1);
    body.kids = std::move(kids);
    return add(std::move(body));
  }

  NodeId parse_enum_body() {
    Node body;
    body.kind = NodeKind::ClassBody;
    body.tok_begin = static_cast<uint32_t>(p_);
    expect_punct("{");
    std::vector<NodeId> kids;
    // constants
    while (!done() && !is_punct("}") && !is_punct(";")) {
      while (is_punct("@")) {  // constant annotations
        p_++;
        if (is_ident()) p_++;
        while (is_punct(".") && is_ident(1)) p_ += 2;
        if (is_punct("(")) consume_balanced_parens();
      }
      if (!is_ident()) break;
      p_++;  // constant name
      if (is_punct("(")) consume_balanced_parens();
      if (is_punct("{")) {
        Node ob;
        ob.kind = NodeKind::OpaqueMember;
        ob.opaque = true;
        ob.tok_begin = static_cast<uint32_t>(p_);
        consume_balanced_braces();
        ob.tok_end = static_cast<uint32_t>(p_ - 1);
        kids.push_back(add(std::move(ob)));
      }
      if (!accept_punct(",")) break;
    }
    if (accept_punct(";")) {
      while (!done() && !is_punct("}")) kids.push_back(parse_member_or_opaque());
    }
    if (!is_punct("}")) throw Bail{};
    p_++;
    body.tok_end = static_cast<uint32_t>(p_ - 1);
    body.kids = std::move(kids);
    return add(std::move(body));
  }

  NodeId parse_member_or_opaque() {
    Mark m = save();
    try {
      return parse_member();
    } catch (Bail&) {
      restore(m);
      Node n;
      n.kind = NodeKind::OpaqueMember;
      n.opaque = true;
      n.tok_begin = static_cast<uint32_t>(p_);
      consume_opaque_unit();
      if (p_ == m.pos) p_++;
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
  }

  NodeId parse_member() {
    uint32_t start = static_cast<uint32_t>(p_);
    if (is_punct(";")) {
      Node e;
      e.kind = NodeKind::EmptyStmt;
      e.tok_begin = e.tok_end = start;
      p_++;
      return add(std::move(e));
    }
    skip_annotations_and_modifiers();
    // initializer block: optional 'static' already consumed unless before '{'
    if (is_punct("{") || (is_kw("static") && is_punct("{", 1))) {
      if (is_kw("static")) p_++;
      Node n;
      n.kind = NodeKind::InitializerBlock;
      n.tok_begin = start;
      n.kids.push_back(parse_block());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("class") || is_kw("interface") || is_kw("enum") ||
        (is_punct("@") && is_kw("interface", 1)) ||
        (is_ident("record") && is_ident(1))) {
      // type declarations carry their own modifiers; reparse from the start
      p_ = start;
      return parse_type_decl();
    }
    if (is_punct("<")) skip_type_args();  // generic method type parameters

    // constructor: Name '(' where Name matches an identifier directly
    // followed by a parameter list and the enclosing class context
    if (is_ident() && is_punct("(", 1)) {
      Node n;
      n.kind = NodeKind::CtorDecl;
      n.tok_begin = start;
      n.name_tok = eat();
      parse_params(n);
      while (is_kw("throws") || is_ident() || is_punct(",") || is_punct(".")) p_++;
      if (!is_punct("{")) throw Bail{};
      n.kids.push_back(parse_block());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }

    uint32_t type_begin = static_cast<uint32_t>(p_);
    if (!try_consume_type()) throw Bail{};
    uint32_t type_end = static_cast<uint32_t>(p_ - 1);
    if (!is_ident()) throw Bail{};
    uint32_t name = eat();

    if (is_punct("(")) {
      Node n;
      n.kind = NodeKind::MethodDecl;
      n.tok_begin = start;
      n.name_tok = name;
      n.c = type_begin;  // return type tokens run from c to name_tok-1
      parse_params(n);
      while (is_punct("[") && is_punct("]", 1)) p_ += 2;  // legacy array returns
      if (is_kw("throws")) {
        p_++;
        while (!done() && !is_punct("{") && !is_punct(";")) {
          if (is_punct("<")) { skip_type_args(); continue; }
          p_++;
        }
      }
      if (is_punct("{")) {
        n.kids.push_back(parse_block());
      } else if (is_punct(";")) {
        p_++;
      } else if (is_kw("default")) {  // annotation member default
        p_++;
        parse_expression();
        expect_punct(";");
      } else {
        throw Bail{};
      }
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }

    // field declaration
    Node n;
    n.kind = NodeKind::FieldDecl;
    n.tok_begin = start;
    n.a = type_begin;
    n.b = type_end;
    p_--;  // put the first declarator name back
    parse_declarators(n);
    expect_punct(";");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  void parse_params(Node& owner) {
    owner.a = static_cast<uint32_t>(p_);
    expect_punct("(");
    if (!is_punct(")")) {
      while (true) {
        NodeId prm = parse_param();
        owner.kids.push_back(prm);
        if (!accept_punct(",")) break;
      }
    }
    if (!is_punct(")")) throw Bail{};
    owner.b = static_cast<uint32_t>(p_);
    p_++;
  }

  NodeId parse_param() {
    Node n;
    n.kind = NodeKind::Param;
    n.tok_begin = static_cast<uint32_t>(p_);
    skip_annotations_and_modifiers();
    n.a = static_cast<uint32_t>(p_);
    if (!try_consume_type()) throw Bail{};
    accept_punct("...");
    n.b = static_cast<uint32_t>(p_ - 1);
    if (is_kw("this")) {  // receiver parameter; not a binding
      n.opaque = true;
      n.name_tok = eat();
    } else {
      if (!is_ident()) throw Bail{};
      n.name_tok = eat();
    }
    while (is_punct("[") && is_punct("]", 1)) p_ += 2;
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  void parse_declarators(Node& owner) {
    while (true) {
      Node d;
      d.kind = NodeKind::Declarator;
      d.tok_begin = static_cast<uint32_t>(p_);
      if (!is_ident()) throw Bail{};
      d.name_tok = eat();
      while (is_punct("[") && is_punct("]", 1)) p_ += 2;
      if (accept_punct("=")) {
        NodeId init = is_punct("{") ? parse_array_init() : parse_expression();
        d.kids.push_back(init);
      }
      d.tok_end = static_cast<uint32_t>(p_ - 1);
      owner.kids.push_back(add(std::move(d)));
      if (!accept_punct(",")) break;
    }
  }

  // ---- types --------------------------------------------------------------

  static bool primitive_kw(std::string_view s) {
    return s == "int" || s == "long" || s == "short" || s == "byte" ||
           s == "char" || s == "boolean" || s == "float" || s == "double" ||
           s == "void";
  }

  bool try_consume_type() {
    while (is_punct("@") && is_ident(1)) {  // type annotations
      p_ += 2;
      while (is_punct(".") && is_ident(1)) p_ += 2;
      if (is_punct("(")) consume_balanced_parens();
    }
    if (cur().kind == TokKind::Keyword && primitive_kw(cur_text())) {
      p_++;
    } else if (is_ident()) {
      p_++;
      if (is_punct("<")) {
        if (!try_skip_type_args()) return false;
      }
      while (is_punct(".") && is_ident(1)) {
        p_ += 2;
        if (is_punct("<")) {
          if (!try_skip_type_args()) return false;
        }
      }
    } else {
      return false;
    }
    while (is_punct("[") && is_punct("]", 1)) p_ += 2;
    return true;
  }

  void skip_type_args() {
    if (!try_skip_type_args()) throw Bail{};
  }

  /// Skips a balanced <...> run. Bails out (returning false, cursor restored)
  /// when the contents cannot be type arguments, so `a < b` stays relational.
  bool try_skip_type_args() {
    size_t start = p_;
    if (!is_punct("<")) return false;
    p_++;
    int depth = 1;
    while (!done() && depth > 0) {
      if (cur().kind == TokKind::Punct) {
        std::string_view s = cur_text();
        if (s == "<") { depth++; p_++; continue; }
        if (s == ">") { depth--; p_++; continue; }
        if (s == "," || s == "." || s == "?" || s == "&" || s == "[" ||
            s == "]" || s == "@") { p_++; continue; }
        if (s == "(" ) { p_ = start; return false; }
        p_ = start;
        return false;
      }
      if (cur().kind == TokKind::Ident ||
          (cur().kind == TokKind::Keyword &&
           (primitive_kw(cur_text()) || cur_text() == "extends" ||
            cur_text() == "super"))) {
        p_++;
        continue;
      }
      p_ = start;
      return false;
    }
    if (depth != 0) { p_ = start; return false; }
    return true;
  }

  // ---- statements ---------------------------------------------------------

  NodeId parse_block() {
    Node n;
    n.kind = NodeKind::Block;
    n.tok_begin = static_cast<uint32_t>(p_);
    expect_punct("{");
    std::vector<NodeId> kids;
    while (!done() && !is_punct("}")) kids.push_back(parse_statement());
    expect_punct("}");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    n.kids = std::move(kids);
    return add(std::move(n));
  }

  NodeId parse_statement() {
    Mark m = save();
    try {
      return parse_statement_inner();
    } catch (Bail&) {
      restore(m);
      Node n;
      n.kind = NodeKind::OpaqueStmt;
      n.opaque = true;
      n.tok_begin = static_cast<uint32_t>(p_);
      consume_opaque_unit();
      if (p_ == m.pos) p_++;
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
  }

  NodeId parse_statement_inner() {
    uint32_t start = static_cast<uint32_t>(p_);
    if (is_punct("{")) return parse_block();
    if (is_punct(";")) {
      Node n;
      n.kind = NodeKind::EmptyStmt;
      n.tok_begin = n.tok_end = start;
      p_++;
      return add(std::move(n));
    }
    if (is_kw("if")) return parse_if();
    if (is_kw("while")) return parse_while();
    if (is_kw("do")) return parse_do_while();
    if (is_kw("for")) return parse_for();
    if (is_kw("switch")) return parse_switch_stmt();
    if (is_kw("break") || is_kw("continue")) {
      Node n;
      n.kind = is_kw("break") ? NodeKind::Break : NodeKind::Continue;
      n.tok_begin = start;
      p_++;
      if (is_ident()) n.name_tok = eat();
      expect_punct(";");
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("return")) {
      Node n;
      n.kind = NodeKind::Return;
      n.tok_begin = start;
      p_++;
      if (!is_punct(";")) n.kids.push_back(parse_expression());
      expect_punct(";");
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("throw")) {
      Node n;
      n.kind = NodeKind::Throw;
      n.tok_begin = start;
      p_++;
      n.kids.push_back(parse_expression());
      expect_punct(";");
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("try")) return parse_try();
    if (is_kw("synchronized") && is_punct("(", 1)) {
      Node n;
      n.kind = NodeKind::Synchronized;
      n.tok_begin = start;
      p_++;
      expect_punct("(");
      n.kids.push_back(parse_expression());
      expect_punct(")");
      n.kids.push_back(parse_block());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("assert")) {
      Node n;
      n.kind = NodeKind::Assert;
      n.tok_begin = start;
      p_++;
      n.kids.push_back(parse_expression());
      if (accept_punct(":")) n.kids.push_back(parse_expression());
      expect_punct(";");
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if ((is_kw("super") || is_kw("this")) && is_punct("(", 1)) {
      Node n;
      n.kind = NodeKind::CtorInvokeStmt;
      n.tok_begin = start;
      p_++;
      parse_call_args(n);
      expect_punct(";");
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_kw("class") || is_kw("final") || is_kw("abstract") ||
        is_kw("static")) {
      // possible local class; fall through to declaration attempt first
      Mark m = save();
      try {
        NodeId t = parse_type_decl();
        Node n;
        n.kind = NodeKind::LocalTypeDecl;
        n.tok_begin = start;
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        n.kids.push_back(t);
        return add(std::move(n));
      } catch (Bail&) {
        restore(m);
      }
    }
    if (is_ident() && is_punct(":", 1)) {
      Node n;
      n.kind = NodeKind::Labeled;
      n.tok_begin = start;
      n.name_tok = eat();
      p_++;  // ':'
      n.kids.push_back(parse_statement());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    // local variable declaration?
    {
      Mark m = save();
      try {
        return parse_local_var_decl(/*consume_semi=*/true);
      } catch (Bail&) {
        restore(m);
      }
    }
    // expression statement
    Node n;
    n.kind = NodeKind::ExprStmt;
    n.tok_begin = start;
    n.kids.push_back(parse_expression());
    expect_punct(";");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_local_var_decl(bool consume_semi) {
    Node n;
    n.kind = NodeKind::LocalVarDecl;
    n.tok_begin = static_cast<uint32_t>(p_);
    skip_annotations_and_modifiers();
    n.a = static_cast<uint32_t>(p_);
    if (!try_consume_type()) throw Bail{};
    n.b = static_cast<uint32_t>(p_ - 1);
    if (!is_ident()) throw Bail{};
    parse_declarators(n);
    if (consume_semi) expect_punct(";");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_if() {
    Node n;
    n.kind = NodeKind::If;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;  // 'if'
    if (!is_punct("(")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_expression());
    if (!is_punct(")")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_statement());
    if (accept_kw("else")) n.kids.push_back(parse_statement());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_while() {
    Node n;
    n.kind = NodeKind::While;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;
    if (!is_punct("(")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_expression());
    if (!is_punct(")")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_statement());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_do_while() {
    Node n;
    n.kind = NodeKind::DoWhile;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_statement());
    if (!accept_kw("while")) throw Bail{};
    if (!is_punct("(")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_expression());
    if (!is_punct(")")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    expect_punct(";");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_for() {
    uint32_t start = static_cast<uint32_t>(p_);
    p_++;  // 'for'
    if (!is_punct("(")) throw Bail{};
    size_t open = p_;
    size_t close = matching_paren(open);
    bool basic = false;
    {
      int depth = 0;
      for (size_t i = open; i <= close; ++i) {
        if (toks_[i].kind != TokKind::Punct) continue;
        std::string_view s = ttext(i);
        if (s == "(") depth++;
        else if (s == ")") depth--;
        else if (s == ";" && depth == 1) { basic = true; break; }
      }
    }
    return basic ? parse_basic_for(start) : parse_enhanced_for(start);
  }

  NodeId parse_basic_for(uint32_t start) {
    Node n;
    n.kind = NodeKind::BasicFor;
    n.tok_begin = start;
    expect_punct("(");
    // init
    if (!is_punct(";")) {
      Mark m = save();
      bool decl = false;
      try {
        n.kids.push_back(parse_local_var_decl(/*consume_semi=*/false));
        decl = true;
      } catch (Bail&) {
        restore(m);
      }
      if (!decl) {
        n.kids.push_back(parse_expression());
        while (accept_punct(",")) n.kids.push_back(parse_expression());
      }
    }
    if (!is_punct(";")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    // condition
    if (!is_punct(";")) n.kids.push_back(parse_expression());
    if (!is_punct(";")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    // update
    if (!is_punct(")")) {
      n.kids.push_back(parse_expression());
      while (accept_punct(",")) n.kids.push_back(parse_expression());
    }
    if (!is_punct(")")) throw Bail{};
    n.c = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_statement());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    // kids = init*, [cond], update*, body; boundaries recoverable from the
    // semicolon token indices a and b
    return add(std::move(n));
  }

  NodeId parse_enhanced_for(uint32_t start) {
    Node n;
    n.kind = NodeKind::EnhancedFor;
    n.tok_begin = start;
    expect_punct("(");
    NodeId var = parse_param();
    if (!is_punct(":")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    NodeId iter = parse_expression();
    if (!is_punct(")")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(var);
    n.kids.push_back(iter);
    n.kids.push_back(parse_statement());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_switch_stmt() {
    Node n;
    n.kind = NodeKind::Switch;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;  // 'switch'
    if (!is_punct("(")) throw Bail{};
    n.a = static_cast<uint32_t>(p_);
    p_++;
    n.kids.push_back(parse_expression());
    if (!is_punct(")")) throw Bail{};
    n.b = static_cast<uint32_t>(p_);
    p_++;
    expect_punct("{");
    while (!done() && !is_punct("}")) {
      n.kids.push_back(parse_switch_group(n));
    }
    expect_punct("}");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_switch_group(Node& sw) {
    Node g;
    g.kind = NodeKind::SwitchGroup;
    g.tok_begin = static_cast<uint32_t>(p_);
    bool any_label = false;
    while (is_kw("case") || is_kw("default")) {
      Node lbl;
      lbl.kind = NodeKind::CaseLabel;
      lbl.tok_begin = static_cast<uint32_t>(p_);
      if (accept_kw("default")) {
        lbl.flag = true;
      } else {
        p_++;  // 'case'
        lbl.kids.push_back(parse_expression());
        while (accept_punct(",")) lbl.kids.push_back(parse_expression());
      }
      if (is_punct("->")) {
        // arrow form: consume the arm and mark the whole switch unusable
        sw.flag = true;
        p_++;
        if (is_punct("{")) consume_balanced_braces();
        else { while (!done() && !is_punct(";")) p_++; if (!done()) p_++; }
        lbl.tok_end = static_cast<uint32_t>(p_ - 1);
        lbl.opaque = true;
        g.kids.push_back(add(std::move(lbl)));
        any_label = true;
        g.tok_end = static_cast<uint32_t>(p_ - 1);
        return add(std::move(g));
      }
      expect_punct(":");
      lbl.tok_end = static_cast<uint32_t>(p_ - 1);
      g.kids.push_back(add(std::move(lbl)));
      any_label = true;
    }
    if (!any_label) throw Bail{};
    while (!done() && !is_kw("case") && !is_kw("default") && !is_punct("}"))
      g.kids.push_back(parse_statement());
    g.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(g));
  }

  NodeId parse_try() {
    Node n;
    n.kind = NodeKind::Try;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;  // 'try'
    if (is_punct("(")) {
      p_++;
      while (!is_punct(")")) {
        Mark m = save();
        bool decl = false;
        try {
          n.kids.push_back(parse_local_var_decl(/*consume_semi=*/false));
          decl = true;
        } catch (Bail&) {
          restore(m);
        }
        if (!decl) n.kids.push_back(parse_expression());
        if (!accept_punct(";")) break;
      }
      expect_punct(")");
    }
    n.kids.push_back(parse_block());
    while (is_kw("catch")) {
      Node c;
      c.kind = NodeKind::CatchClause;
      c.tok_begin = static_cast<uint32_t>(p_);
      p_++;
      expect_punct("(");
      Node prm;
      prm.kind = NodeKind::Param;
      prm.tok_begin = static_cast<uint32_t>(p_);
      skip_annotations_and_modifiers();
      prm.a = static_cast<uint32_t>(p_);
      if (!try_consume_type()) throw Bail{};
      while (accept_punct("|")) {
        if (!try_consume_type()) throw Bail{};
      }
      prm.b = static_cast<uint32_t>(p_ - 1);
      if (!is_ident()) throw Bail{};
      prm.name_tok = eat();
      prm.tok_end = static_cast<uint32_t>(p_ - 1);
      c.kids.push_back(add(std::move(prm)));
      expect_punct(")");
      c.kids.push_back(parse_block());
      c.tok_end = static_cast<uint32_t>(p_ - 1);
      n.kids.push_back(add(std::move(c)));
    }
    if (accept_kw("finally")) n.kids.push_back(parse_block());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  // ---- expressions --------------------------------------------------------

  NodeId parse_expression() { return parse_assignment(); }

  bool at_assignment_op(uint32_t& first, uint32_t& last) {
    if (cur().kind != TokKind::Punct) return false;
    std::string_view s = cur_text();
    if (s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" ||
        s == "%=" || s == "&=" || s == "|=" || s == "^=" || s == "<<=") {
      first = last = static_cast<uint32_t>(p_);
      p_++;
      return true;
    }
    if (s == ">") {
      // '>' '>=' -> >>= ; '>' '>' '>=' -> >>>=
      if (is_punct(">=", 1) && adjacent(p_, p_ + 1)) {
        first = static_cast<uint32_t>(p_);
        last = static_cast<uint32_t>(p_ + 1);
        p_ += 2;
        return true;
      }
      if (is_punct(">", 1) && is_punct(">=", 2) && adjacent(p_, p_ + 1) &&
          adjacent(p_ + 1, p_ + 2)) {
        first = static_cast<uint32_t>(p_);
        last = static_cast<uint32_t>(p_ + 2);
        p_ += 3;
        return true;
      }
    }
    return false;
  }

  NodeId parse_assignment() {
    NodeId lhs = parse_ternary();
    uint32_t f = 0, l = 0;
    Mark m = save();
    if (at_assignment_op(f, l)) {
      Node n;
      n.kind = NodeKind::Assign;
      n.tok_begin = tree_.node(lhs).tok_begin;
      n.a = f;
      n.b = l;
      n.kids.push_back(lhs);
      n.kids.push_back(parse_assignment());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    restore(m);
    return lhs;
  }

  NodeId parse_ternary() {
    NodeId cond = parse_binary(1);
    if (is_punct("?")) {
      Node n;
      n.kind = NodeKind::Ternary;
      n.tok_begin = tree_.node(cond).tok_begin;
      p_++;
      NodeId t = parse_expression();
      expect_punct(":");
      NodeId f = parse_expression();
      n.kids = {cond, t, f};
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    return cond;
  }

  // Returns operator precedence, or 0 when the current token is not a binary
  // operator. ntoks receives how many tokens make up the operator.
  int peek_binary_op(std::string& op, size_t& ntoks) {
    if (is_kw("instanceof")) { op = "instanceof"; ntoks = 1; return 7; }
    if (cur().kind != TokKind::Punct) return 0;
    std::string_view s = cur_text();
    if (s == ">") {
      // '>' '>=' and '>' '>' '>=' are shift-assignments, not binary operators
      if (is_punct(">=", 1) && adjacent(p_, p_ + 1)) return 0;
      if (is_punct(">", 1) && adjacent(p_, p_ + 1)) {
        if (is_punct(">=", 2) && adjacent(p_ + 1, p_ + 2)) return 0;
        if (is_punct(">", 2) && adjacent(p_ + 1, p_ + 2)) {
          op = ">>>";
          ntoks = 3;
          return 8;
        }
        op = ">>";
        ntoks = 2;
        return 8;
      }
      op = ">";
      ntoks = 1;
      return 7;
    }
    ntoks = 1;
    if (s == "*" || s == "/" || s == "%") { op = s; return 10; }
    if (s == "+" || s == "-") { op = s; return 9; }
    if (s == "<<") { op = s; return 8; }
    if (s == "<" || s == "<=" || s == ">=") { op = s; return 7; }
    if (s == "==" || s == "!=") { op = s; return 6; }
    if (s == "&") { op = s; return 5; }
    if (s == "^") { op = s; return 4; }
    if (s == "|") { op = s; return 3; }
    if (s == "&&") { op = s; return 2; }
    if (s == "||") { op = s; return 1; }
    return 0;
  }

  NodeId parse_binary(int min_prec) {
    NodeId lhs = parse_unary();
    while (true) {
      std::string op;
      size_t ntoks = 0;
      int prec = peek_binary_op(op, ntoks);
      if (prec == 0 || prec < min_prec) return lhs;
      uint32_t op_first = static_cast<uint32_t>(p_);
      uint32_t op_last = static_cast<uint32_t>(p_ + ntoks - 1);
      p_ += ntoks;
      if (op == "instanceof") {
        Node n;
        n.kind = NodeKind::InstanceOf;
        n.tok_begin = tree_.node(lhs).tok_begin;
        n.a = op_first;
        n.kids.push_back(lhs);
        if (!try_consume_type()) throw Bail{};
        if (is_ident()) {  // pattern variable declares a binding
          Node prm;
          prm.kind = NodeKind::Param;
          prm.tok_begin = static_cast<uint32_t>(p_);
          prm.name_tok = eat();
          prm.tok_end = prm.tok_begin;
          n.kids.push_back(add(std::move(prm)));
        }
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        lhs = add(std::move(n));
        continue;
      }
      NodeId rhs = parse_binary(prec + 1);
      Node n;
      n.kind = NodeKind::Binary;
      n.tok_begin = tree_.node(lhs).tok_begin;
      n.a = op_first;
      n.b = op_last;
      n.kids = {lhs, rhs};
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      lhs = add(std::move(n));
    }
  }

  NodeId parse_unary() {
    uint32_t start = static_cast<uint32_t>(p_);
    if (is_punct("++") || is_punct("--")) {
      Node n;
      n.kind = NodeKind::PreIncDec;
      n.tok_begin = start;
      n.a = eat();
      n.kids.push_back(parse_unary());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_punct("+") || is_punct("-") || is_punct("!") || is_punct("~")) {
      Node n;
      n.kind = NodeKind::Unary;
      n.tok_begin = start;
      n.a = eat();
      n.kids.push_back(parse_unary());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (is_punct("(")) {
      Mark m = save();
      NodeId cast = try_parse_cast();
      if (cast != kNoNode) return cast;
      restore(m);
    }
    return parse_postfix();
  }

  NodeId try_parse_cast() {
    uint32_t start = static_cast<uint32_t>(p_);
    try {
      expect_punct("(");
      uint32_t type_begin = static_cast<uint32_t>(p_);
      bool primitive =
          cur().kind == TokKind::Keyword && primitive_kw(cur_text());
      if (!try_consume_type()) return kNoNode;
      // intersection casts: (A & B) x
      while (accept_punct("&")) {
        if (!try_consume_type()) return kNoNode;
      }
      uint32_t type_end = static_cast<uint32_t>(p_ - 1);
      if (!is_punct(")")) return kNoNode;
      p_++;
      const Token& next = cur();
      bool operand_start = false;
      switch (next.kind) {
        case TokKind::Ident:
        case TokKind::IntLit:
        case TokKind::LongLit:
        case TokKind::FloatLit:
        case TokKind::CharLit:
        case TokKind::StringLit:
        case TokKind::TextBlock:
          operand_start = true;
          break;
        case TokKind::Keyword: {
          std::string_view s = cur_text();
          operand_start = s == "new" || s == "this" || s == "super" ||
                          s == "true" || s == "false" || s == "null";
          break;
        }
        case TokKind::Punct: {
          std::string_view s = cur_text();
          if (s == "(") operand_start = true;
          if (s == "!" || s == "~") operand_start = true;
          if (primitive && (s == "+" || s == "-")) operand_start = true;
          break;
        }
        default:
          break;
      }
      if (!operand_start) return kNoNode;
      // `(name)(...)` is only meaningful as a cast; `(name) ident` likewise
      Node n;
      n.kind = NodeKind::Cast;
      n.tok_begin = start;
      n.a = type_begin;
      n.b = type_end;
      n.kids.push_back(parse_unary());
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    } catch (Bail&) {
      return kNoNode;
    }
  }

  void parse_call_args(Node& n) {
    expect_punct("(");
    if (!is_punct(")")) {
      n.kids.push_back(parse_expression());
      while (accept_punct(",")) n.kids.push_back(parse_expression());
    }
    expect_punct(")");
  }

  NodeId parse_postfix() {
    NodeId e = parse_primary();
    while (true) {
      uint32_t begin = tree_.node(e).tok_begin;
      if (is_punct(".")) {
        if (is_kw("class", 1)) {
          Node n;
          n.kind = NodeKind::ClassLiteral;
          n.tok_begin = begin;
          n.kids.push_back(e);
          p_ += 2;
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          e = add(std::move(n));
          continue;
        }
        if (is_kw("new", 1)) {  // qualified inner-class creation
          Node n;
          n.kind = NodeKind::OpaqueExpr;
          n.opaque = true;
          n.tok_begin = begin;
          p_ += 2;
          if (!is_ident()) throw Bail{};
          p_++;
          if (is_punct("<")) skip_type_args();
          if (!is_punct("(")) throw Bail{};
          consume_balanced_parens();
          if (is_punct("{")) consume_balanced_braces();
          n.kids.push_back(e);
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          e = add(std::move(n));
          continue;
        }
        if (is_punct("<", 1)) {  // explicit generic method call
          size_t dot = p_;
          p_++;
          if (!try_skip_type_args()) { p_ = dot; throw Bail{}; }
          if (!is_ident() || !is_punct("(", 1)) throw Bail{};
          Node n;
          n.kind = NodeKind::Call;
          n.tok_begin = begin;
          n.flag = true;  // has receiver
          n.name_tok = eat();
          n.kids.push_back(e);
          parse_call_args(n);
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          e = add(std::move(n));
          continue;
        }
        if (is_ident(1) || is_kw("this", 1) || is_kw("super", 1)) {
          if (is_ident(1) && is_punct("(", 2)) {
            Node n;
            n.kind = NodeKind::Call;
            n.tok_begin = begin;
            n.flag = true;
            p_++;  // '.'
            n.name_tok = eat();
            n.kids.push_back(e);
            parse_call_args(n);
            n.tok_end = static_cast<uint32_t>(p_ - 1);
            e = add(std::move(n));
            continue;
          }
          Node n;
          n.kind = NodeKind::FieldAccess;
          n.tok_begin = begin;
          p_++;  // '.'
          n.name_tok = eat();
          n.kids.push_back(e);
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          e = add(std::move(n));
          continue;
        }
        throw Bail{};
      }
      if (is_punct("[")) {
        Node n;
        n.kind = NodeKind::ArrayAccess;
        n.tok_begin = begin;
        p_++;
        n.kids.push_back(e);
        n.kids.push_back(parse_expression());
        expect_punct("]");
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        e = add(std::move(n));
        continue;
      }
      if (is_punct("::")) {
        Node n;
        n.kind = NodeKind::MethodRef;
        n.tok_begin = begin;
        p_++;
        if (is_kw("new")) p_++;
        else if (is_ident()) p_++;
        else throw Bail{};
        n.kids.push_back(e);
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        e = add(std::move(n));
        continue;
      }
      if (is_punct("++") || is_punct("--")) {
        Node n;
        n.kind = NodeKind::PostIncDec;
        n.tok_begin = begin;
        n.a = eat();
        n.kids.push_back(e);
        n.tok_end = static_cast<uint32_t>(p_ - 1);
        e = add(std::move(n));
        continue;
      }
      return e;
    }
  }

  NodeId parse_primary() {
    uint32_t start = static_cast<uint32_t>(p_);
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::IntLit:
      case TokKind::LongLit:
      case TokKind::FloatLit:
      case TokKind::CharLit:
      case TokKind::StringLit:
      case TokKind::TextBlock: {
        Node n;
        n.kind = NodeKind::Literal;
        n.tok_begin = n.tok_end = start;
        n.a = eat();
        return add(std::move(n));
      }
      case TokKind::Keyword: {
        std::string_view s = cur_text();
        if (s == "true" || s == "false" || s == "null") {
          Node n;
          n.kind = NodeKind::Literal;
          n.tok_begin = n.tok_end = start;
          n.a = eat();
          return add(std::move(n));
        }
        if (s == "this") {
          Node n;
          n.kind = NodeKind::ThisExpr;
          n.tok_begin = n.tok_end = start;
          p_++;
          return add(std::move(n));
        }
        if (s == "super") {
          Node n;
          n.kind = NodeKind::SuperExpr;
          n.tok_begin = n.tok_end = start;
          p_++;
          return add(std::move(n));
        }
        if (s == "new") return parse_creation();
        if (s == "switch") {  // switch expression: opaque
          Node n;
          n.kind = NodeKind::OpaqueExpr;
          n.opaque = true;
          n.tok_begin = start;
          p_++;
          if (!is_punct("(")) throw Bail{};
          consume_balanced_parens();
          if (!is_punct("{")) throw Bail{};
          consume_balanced_braces();
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          return add(std::move(n));
        }
        if (primitive_kw(s)) {  // int.class, int[]::new, etc.
          Node n;
          n.kind = NodeKind::OpaqueExpr;
          n.opaque = true;
          n.tok_begin = start;
          if (!try_consume_type()) throw Bail{};
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          return add(std::move(n));
        }
        throw Bail{};
      }
      case TokKind::Ident: {
        if (is_punct("->", 1)) return parse_lambda_single();
        if (is_punct("(", 1)) {
          Node n;
          n.kind = NodeKind::Call;
          n.tok_begin = start;
          n.name_tok = eat();
          parse_call_args(n);
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          return add(std::move(n));
        }
        Node n;
        n.kind = NodeKind::Ident;
        n.tok_begin = n.tok_end = start;
        n.name_tok = eat();
        return add(std::move(n));
      }
      case TokKind::Punct: {
        if (is_punct("(")) {
          size_t close = matching_paren(p_);
          bool lambda = close + 1 < toks_.size() &&
                        toks_[close + 1].kind == TokKind::Punct &&
                        ttext(close + 1) == "->";
          if (lambda) return parse_lambda_parenthesized();
          Node n;
          n.kind = NodeKind::Paren;
          n.tok_begin = start;
          p_++;
          n.kids.push_back(parse_expression());
          expect_punct(")");
          n.tok_end = static_cast<uint32_t>(p_ - 1);
          return add(std::move(n));
        }
        throw Bail{};
      }
      default:
        throw Bail{};
    }
  }

  NodeId parse_lambda_single() {
    Node n;
    n.kind = NodeKind::Lambda;
    n.tok_begin = static_cast<uint32_t>(p_);
    Node prm;
    prm.kind = NodeKind::Param;
    prm.tok_begin = static_cast<uint32_t>(p_);
    prm.name_tok = eat();
    prm.tok_end = prm.tok_begin;
    n.kids.push_back(add(std::move(prm)));
    expect_punct("->");
    n.kids.push_back(is_punct("{") ? parse_block() : parse_expression());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_lambda_parenthesized() {
    Node n;
    n.kind = NodeKind::Lambda;
    n.tok_begin = static_cast<uint32_t>(p_);
    expect_punct("(");
    if (!is_punct(")")) {
      // bare name list, or fully typed parameters
      bool bare = is_ident() && (is_punct(",", 1) || is_punct(")", 1));
      if (bare) {
        while (true) {
          Node prm;
          prm.kind = NodeKind::Param;
          prm.tok_begin = static_cast<uint32_t>(p_);
          if (!is_ident()) throw Bail{};
          prm.name_tok = eat();
          prm.tok_end = prm.tok_begin;
          n.kids.push_back(add(std::move(prm)));
          if (!accept_punct(",")) break;
        }
      } else {
        while (true) {
          n.kids.push_back(parse_param());
          if (!accept_punct(",")) break;
        }
      }
    }
    expect_punct(")");
    expect_punct("->");
    n.kids.push_back(is_punct("{") ? parse_block() : parse_expression());
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  NodeId parse_creation() {
    Node n;
    n.tok_begin = static_cast<uint32_t>(p_);
    p_++;  // 'new'
    if (is_punct("<")) skip_type_args();  // constructor type arguments
    uint32_t type_begin = static_cast<uint32_t>(p_);
    if (!try_consume_type_no_dims()) throw Bail{};
    uint32_t type_end = static_cast<uint32_t>(p_ - 1);
    if (is_punct("[")) {
      n.kind = NodeKind::NewArray;
      n.a = type_begin;
      n.b = type_end;
      bool saw_empty = false;
      while (is_punct("[")) {
        p_++;
        if (is_punct("]")) {
          saw_empty = true;
          p_++;
          continue;
        }
        n.kids.push_back(parse_expression());
        expect_punct("]");
      }
      if (saw_empty || is_punct("{")) {
        if (is_punct("{")) n.kids.push_back(parse_array_init());
      }
      n.tok_end = static_cast<uint32_t>(p_ - 1);
      return add(std::move(n));
    }
    if (!is_punct("(")) throw Bail{};
    n.kind = NodeKind::NewObject;
    n.a = type_begin;
    n.b = type_end;
    parse_call_args(n);
    if (is_punct("{")) n.kids.push_back(parse_class_body());  // anonymous class
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  /// Like try_consume_type but stops before array dims so `new int[3]` keeps
  /// its '[' for dimension parsing.
  bool try_consume_type_no_dims() {
    if (cur().kind == TokKind::Keyword && primitive_kw(cur_text())) {
      p_++;
      return true;
    }
    if (!is_ident()) return false;
    p_++;
    if (is_punct("<")) {
      if (!try_skip_type_args()) return false;
    }
    while (is_punct(".") && is_ident(1)) {
      p_ += 2;
      if (is_punct("<")) {
        if (!try_skip_type_args()) return false;
      }
    }
    return true;
  }

  NodeId parse_array_init() {
    Node n;
    n.kind = NodeKind::ArrayInit;
    n.tok_begin = static_cast<uint32_t>(p_);
    expect_punct("{");
    while (!is_punct("}")) {
      n.kids.push_back(is_punct("{") ? parse_array_init() : parse_expression());
      if (!accept_punct(",")) break;
    }
    expect_punct("}");
    n.tok_end = static_cast<uint32_t>(p_ - 1);
    return add(std::move(n));
  }

  SyntaxTree tree_;
  std::vector<Token> toks_;
  size_t p_ = 0;
};

/// Parses a source unit into a lossless tree.
/// Throws SyntaxError on lexical errors or unbalanced brackets, and
/// EncodingError (from SourceUnit) on invalid UTF-8.
inline SyntaxTree parse(SourceUnit unit) { return Parser(std::move(unit)).run(); }

inline SyntaxTree parse_file(const std::string& path) {
  return parse(SourceUnit::from_file(path));
}

}  // namespace jrecast::syntax
