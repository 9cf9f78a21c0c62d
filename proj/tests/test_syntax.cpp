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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "jrecast/syntax/bindings.hpp"
#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/parser.hpp"

using namespace jrecast;
using namespace jrecast::syntax;

namespace {

SyntaxTree parse_str(const std::string& text) {
  return parse(SourceUnit::from_string("test.java", text));
}

// Straight-line splice used as the independent oracle for render().
std::string naive_splice(std::string text, std::vector<Edit> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.span.begin > b.span.begin; });
  for (const Edit& e : edits)
    text = text.substr(0, e.span.begin) + e.text + text.substr(e.span.end);
  return text;
}

}  // namespace

// ============================================================================
// Parsing
// ============================================================================

TEST_CASE("minimal unit: one type declaration, zero methods") {
  SyntaxTree t = parse_str("class A {}");
  auto types = t.collect(t.root(), NodeKind::TypeDecl);
  REQUIRE(types.size() == 1);
  CHECK(all_functions(t).empty());
}

TEST_CASE("round-trip identity through parse and render") {
  std::string src =
      "package p.q;\n"
      "import java.util.List;\n\n"
      "/** doc */\n"
      "public class A<T extends Comparable<T>> {\n"
      "  private int count = 0; // trailing\n"
      "  static final String S = \"hi\\n\";\n"
      "  public A(int x) { super(); this.count = x; }\n"
      "  int m(int a, int... rest) throws Exception {\n"
      "    for (int i = 0, j = 1; i < a; i++, j--) { count += i; }\n"
      "    while (a > 0) a--;\n"
      "    do { a++; } while (a < 3);\n"
      "    switch (a) { case 1: case 2: a = 3; break; default: a = 4; }\n"
      "    List<String> xs = new java.util.ArrayList<>();\n"
      "    for (String s : xs) { if (s.isEmpty()) continue; }\n"
      "    try (java.io.Reader r = null) { a = (int) 0L; }\n"
      "    catch (RuntimeException | Error e) { throw e; }\n"
      "    finally { a = 0; }\n"
      "    int[] arr = new int[]{1, 2, 3};\n"
      "    Runnable fn = () -> { int q = arr[0]; q += a; };\n"
      "    label: for (;;) { break label; }\n"
      "    return a > 0 ? a : -a;\n"
      "  }\n"
      "}\n";
  SyntaxTree t = parse_str(src);
  CHECK(render(t, {}).text() == src);
}

TEST_CASE("CRLF and mixed endings survive round-trip") {
  std::string src = "class A {\r\n  void m() {\r\n    int x = 1;\n  }\r\n}\r\n";
  SyntaxTree t = parse_str(src);
  CHECK(render(t, {}).text() == src);
  CHECK(t.unit().eol_style() == EolStyle::Mixed);
  CHECK(t.unit().eol_string() == "\r\n");
}

TEST_CASE("unbalanced parenthesis is a syntax error with position") {
  CHECK_THROWS_AS(parse_str("class A { void m( }"), SyntaxError);
  try {
    parse_str("class A { void m( }");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
  }
}

TEST_CASE("invalid UTF-8 is an encoding error") {
  std::string bad = "class A {}";
  bad += static_cast<char>(0xC0);
  CHECK_THROWS_AS(SourceUnit::from_string("x.java", bad), EncodingError);
}

TEST_CASE("unknown constructs become opaque, not failures") {
  // switch expression with arrows: modeled as opaque
  std::string src =
      "class A { int m(int k) { int v = switch (k) { case 1 -> 2; default -> 3; }; return v; } }";
  SyntaxTree t = parse_str(src);
  CHECK(render(t, {}).text() == src);
  bool has_opaque = false;
  t.walk(t.root(), [&](NodeId id) {
    if (t.node(id).opaque) has_opaque = true;
    return true;
  });
  CHECK(has_opaque);
}

TEST_CASE("statement node kinds are recognized") {
  std::string src =
      "class A { void m(int n) {\n"
      "  if (n > 0) { n--; } else if (n < 0) n++;\n"
      "  for (int i = 0; i < n; i++) {}\n"
      "  while (n > 0) n--;\n"
      "} }";
  SyntaxTree t = parse_str(src);
  CHECK(t.collect(t.root(), NodeKind::If).size() == 2);
  CHECK(t.collect(t.root(), NodeKind::BasicFor).size() == 1);
  CHECK(t.collect(t.root(), NodeKind::While).size() == 1);
  for (NodeId id : t.collect(t.root(), NodeKind::OpaqueStmt))
    FAIL("unexpected opaque statement: ", t.text(id));
}

TEST_CASE("child spans nest within parents, siblings ordered and disjoint") {
  std::string src =
      "class A { int f(int a, int b) { if (a < b) { return a; } return b; } }";
  SyntaxTree t = parse_str(src);
  t.walk(t.root(), [&](NodeId id) {
    Span ps = t.span(id);
    const auto& kids = t.node(id).kids;
    uint32_t prev_end = 0;
    for (NodeId k : kids) {
      Span ks = t.span(k);
      CHECK(ps.begin <= ks.begin);
      CHECK(ks.end <= ps.end);
      CHECK(prev_end <= ks.begin);
      prev_end = ks.end;
    }
    return true;
  });
}

// ============================================================================
// locate_function
// ============================================================================

TEST_CASE("locate_function finds the unique method") {
  SyntaxTree t = parse_str("class A {\n  void m() {\n    int x;\n  }\n}\n");
  NodeId fn = locate_function(t, "m", 3);
  CHECK(function_name(t, fn) == "m");
}

TEST_CASE("locate_function separates overloads by line containment") {
  std::string src =
      "class A {\n"
      "  void m(int x) { x++; }\n"
      "  void m(long x) {\n"
      "    x--;\n"
      "  }\n"
      "}\n";
  SyntaxTree t = parse_str(src);
  NodeId fn = locate_function(t, "m", 4);
  CHECK(t.unit().line_of(t.span(fn).begin) == 3);
}

TEST_CASE("locate_function error cases") {
  SyntaxTree t = parse_str("class A { void m() {} }");
  CHECK_THROWS_AS(locate_function(t, "nope", 1), FunctionNotFound);
  SyntaxTree t2 = parse_str("class A {\n void m() {}\n void z() {}\n}");
  CHECK_THROWS_AS(locate_function(t2, "m", 3), AmbiguousFunction);
}

// ============================================================================
// render / edits
// ============================================================================

TEST_CASE("empty edit script reproduces input") {
  std::string src = "class A { void m() { int i = 0; } }";
  SyntaxTree t = parse_str(src);
  CHECK(render(t, {}).text() == src);
}

TEST_CASE("single replacement changes only its span") {
  std::string src = "class A { boolean m(int i, int n) { return i < n; } }";
  size_t at = src.find("i < n");
  EditScript edits = {{{(uint32_t)at, (uint32_t)(at + 5)}, "!( !(i < n))"}};
  SourceUnit out = render(SourceUnit::from_string("x.java", src), edits);
  CHECK(out.text() ==
        "class A { boolean m(int i, int n) { return !( !(i < n)); } }");
}

TEST_CASE("adjacent edits match the naive splice oracle, either order") {
  std::string src = "abcdefgh";
  Edit e1{{2, 4}, "XY"};
  Edit e2{{4, 6}, "Z"};
  std::string expect = naive_splice(src, {e1, e2});
  SourceUnit u = SourceUnit::from_string("x.java", src);
  CHECK(render(u, {e1, e2}).text() == expect);
  CHECK(render(u, {e2, e1}).text() == expect);
  CHECK(expect == "abXYZgh");
}

TEST_CASE("overlapping edits are rejected") {
  SourceUnit u = SourceUnit::from_string("x.java", "abcdefgh");
  CHECK_THROWS_AS(render(u, {{{2, 5}, "A"}, {{4, 6}, "B"}}), OverlappingEdits);
}

TEST_CASE("offset map tracks positions through edits") {
  // "aaBBcc" -> replace BB with XXXX: offsets after shift by +2
  OffsetMap m({{{2, 4}, "XXXX"}});
  CHECK(m.map(0) == 0);
  CHECK(m.map(2) == 2);   // inside the edit: maps to its start
  CHECK(m.map(3) == 2);
  CHECK(m.map(4) == 6);   // first byte after the edit
  CHECK(m.map(6) == 8);
  CHECK(m.was_rewritten(3));
  CHECK(!m.was_rewritten(4));
}

// ============================================================================
// resolve_bindings
// ============================================================================

TEST_CASE("single parameter with one reference") {
  SyntaxTree t = parse_str("class A { void m(int a) { a++; } }");
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  REQUIRE(bt.entries.size() == 1);
  CHECK(bt.entries[0].name == "a");
  CHECK(bt.entries[0].kind == BindingKind::Parameter);
  CHECK(bt.entries[0].refs.size() == 1);
}

TEST_CASE("shadowed locals bind to the innermost declaration") {
  SyntaxTree t = parse_str(
      "class A { void m() { int x = 0; { int x = 1; x++; } x--; } }");
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  REQUIRE(bt.entries.size() == 2);
  const BindingEntry& outer = bt.entries[0];
  const BindingEntry& inner = bt.entries[1];
  CHECK(outer.refs.size() == 1);  // x--
  CHECK(inner.refs.size() == 1);  // x++
  // the inner reference site must sit inside the inner block
  uint32_t inner_ref = t.span(inner.refs[0]).begin;
  uint32_t outer_ref = t.span(outer.refs[0]).begin;
  CHECK(inner_ref < outer_ref);
}

TEST_CASE("field references are excluded") {
  SyntaxTree t = parse_str("class A { int count; void m() { count++; } }");
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  CHECK(bt.entries.empty());
  REQUIRE(bt.diagnostics.size() == 1);
  CHECK(bt.diagnostics[0].name == "count");
}

TEST_CASE("qualified names and method names are not references") {
  SyntaxTree t = parse_str(
      "class A { void m(int a) { this.a = a; other.a(); helper(a); } int a; }");
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  REQUIRE(bt.entries.size() == 1);
  // refs: `= a` and `helper(a)` only
  CHECK(bt.entries[0].refs.size() == 2);
}

TEST_CASE("names reaching into anonymous class bodies are excluded") {
  std::string src =
      "class A { void m() { int n = 1; Runnable r = new Runnable() {"
      " public void run() { use(n); } }; } }";
  SyntaxTree t = parse_str(src);
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  for (const auto& e : bt.entries) CHECK(e.name != "n");
  bool diag = false;
  for (const auto& d : bt.diagnostics)
    if (d.name == "n") diag = true;
  CHECK(diag);
}

TEST_CASE("loop, catch, resource and lambda declarations are bindings") {
  std::string src =
      "class A { void m(java.util.List<String> xs) {\n"
      "  for (int i = 0; i < 3; i++) {}\n"
      "  for (String s : xs) { s.length(); }\n"
      "  try (java.io.Reader r = null) {} catch (Exception e) { e.toString(); }\n"
      "  Runnable k = () -> {};\n"
      "} }";
  SyntaxTree t = parse_str(src);
  BindingTable bt = resolve_bindings(t, locate_function(t, "m", 1));
  std::vector<std::string> names;
  for (const auto& e : bt.entries) names.push_back(e.name);
  for (const char* want : {"xs", "i", "s", "r", "e", "k"}) {
    CAPTURE(want);
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
}
